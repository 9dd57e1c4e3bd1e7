#include "logbundle/steiner.hpp"

#include <map>

#include "logbundle/errors.hpp"
#include "logbundle/poly.hpp"
#include "logbundle/rng.hpp"

namespace logbundle {

SteinerTensor::SteinerTensor(std::vector<Matrix> s) : slices(std::move(s)) {
    if (slices.empty()) throw DomainError("shape", "tensor needs at least one slice");
    dim_v = slices.size();
    dim_w = slices.front().rows();
    dim_i = slices.front().cols();
    for (const auto& sl : slices) {
        if (sl.rows() != dim_w || sl.cols() != dim_i) throw DomainError("shape", "slices differ in shape");
    }
    if (dim_w < dim_i || dim_w - dim_i != dim_v - 1) {
        throw DomainError("shape", "need dim W - dim I = dim V - 1");
    }
}

Matrix fiber_map(const SteinerTensor& t, std::span<const Rational> v) {
    if (v.size() != t.dim_v) throw DomainError("shape", "vector length differs from dim V");
    bool nonzero = false;
    Matrix out(t.dim_w, t.dim_i);
    for (std::size_t j = 0; j < t.dim_v; ++j) {
        if (sgn(v[j]) == 0) continue;
        nonzero = true;
        out = out + t.slices[j].scaled(v[j]);
    }
    if (!nonzero) throw DomainError("zero_vector", "fiber at the zero vector");
    return out;
}

bool injective_at(const SteinerTensor& t, std::span<const Rational> v) {
    return mat_rank(fiber_map(t, v)) == t.dim_i;
}

bool certify_injectivity(const SteinerTensor& t, std::size_t trials, std::uint64_t seed) {
    Rng rng(seed);
    for (std::size_t k = 0; k < trials; ++k) {
        if (!injective_at(t, rng.nonzero_vector(t.dim_v, 50))) return false;
    }
    return true;
}

SteinerTensor associated_steiner(const SteinerTensor& t) {
    std::vector<Matrix> out;
    for (std::size_t k = 0; k < t.dim_i; ++k) {
        Matrix s(t.dim_w, t.dim_v);
        for (std::size_t w = 0; w < t.dim_w; ++w)
            for (std::size_t v = 0; v < t.dim_v; ++v) s(w, v) = t.slices[v](w, k);
        out.push_back(std::move(s));
    }
    return SteinerTensor(std::move(out));
}

std::vector<Integer> chern_coeffs(long n, long m) {
    if (n < 1 || m < n + 2) throw DomainError("range", "chern_coeffs needs m >= n+2");
    std::vector<Integer> c;
    for (long i = 1; i <= n; ++i) c.push_back(binomial(m - n - 2 + i, i));
    return c;
}

std::pair<long, long> normalization_split(long n, long m) {
    if (n < 1 || m < n + 2) throw DomainError("range", "normalization_split needs m >= n+2");
    return {(m - 1) / n, (m - 1) % n};
}

namespace {

std::map<Exponent, std::size_t> index_of(const std::vector<Exponent>& monos) {
    std::map<Exponent, std::size_t> idx;
    for (std::size_t k = 0; k < monos.size(); ++k) idx.emplace(monos[k], k);
    return idx;
}

// Matrix of  a (x) g  |->  sum_j (slice_j a) (x) x_j g  from
// A (x) S^deg V*  to  B (x) S^{deg+1} V*, where `slices[j]` is |B| x |A|.
Matrix multiplication_matrix(const std::vector<Matrix>& slices, long deg) {
    const std::size_t nv = slices.size();
    const std::size_t da = slices.front().cols(), db = slices.front().rows();
    if (deg < 0) return Matrix(0, 0);
    const auto src = monomials_glex(nv, static_cast<unsigned>(deg));
    const auto dst = monomials_glex(nv, static_cast<unsigned>(deg + 1));
    const auto dst_idx = index_of(dst);
    Matrix mat(db * dst.size(), da * src.size());
    for (std::size_t a = 0; a < da; ++a)
        for (std::size_t g = 0; g < src.size(); ++g) {
            const std::size_t col = a * src.size() + g;
            for (std::size_t j = 0; j < nv; ++j) {
                Exponent e = src[g];
                ++e[j];
                const std::size_t target = dst_idx.at(e);
                for (std::size_t b = 0; b < db; ++b) {
                    const Rational& c = slices[j](b, a);
                    if (sgn(c) != 0) mat(b * dst.size() + target, col) += c;
                }
            }
        }
    return mat;
}

Integer count(long dim, long a, long n) { return Integer(dim) * binomial(a, n); }

}  // namespace

std::vector<Integer> cohomology_dims(const SteinerTensor& t, long k) {
    const long n = static_cast<long>(t.n());
    const long di = static_cast<long>(t.dim_i), dw = static_cast<long>(t.dim_w);
    // H^0 part: I (x) S^{k-1} -> W (x) S^k.
    const Matrix mu = multiplication_matrix(t.slices, k - 1);
    const Integer rank_mu = mu.empty() ? Integer(0) : Integer(static_cast<unsigned long>(mat_rank(mu)));
    // Top cohomology, through the dual multiplication
    // W* (x) S^{-k-n-1} -> I* (x) S^{-k-n}.
    std::vector<Matrix> transposed;
    for (const auto& s : t.slices) transposed.push_back(s.transpose());
    const Matrix nu = multiplication_matrix(transposed, -k - n - 1);
    const Integer rank_nu = nu.empty() ? Integer(0) : Integer(static_cast<unsigned long>(mat_rank(nu)));

    std::vector<Integer> h(static_cast<std::size_t>(n) + 1, 0);
    const Integer top_kernel = count(di, -k, n) - rank_nu;
    const Integer top_coker = count(dw, -k - 1, n) - rank_nu;
    h[0] = count(dw, n + k, n) - rank_mu;
    if (n == 1) {
        h[0] += top_kernel;
    } else {
        h[static_cast<std::size_t>(n - 1)] = top_kernel;
    }
    h[static_cast<std::size_t>(n)] = top_coker;
    return h;
}

SteinerTensor schwarzenberger_tensor(long n, long m) {
    if (n < 1 || m < n + 2) throw DomainError("range", "schwarzenberger_tensor needs m >= n+2");
    const std::size_t di = static_cast<std::size_t>(m - n - 1), dw = static_cast<std::size_t>(m - 1);
    std::vector<Matrix> slices;
    for (std::size_t j = 0; j <= static_cast<std::size_t>(n); ++j) {
        Matrix s(dw, di);
        for (std::size_t e = 0; e < di; ++e) s(j + e, e) = 1;
        slices.push_back(std::move(s));
    }
    return SteinerTensor(std::move(slices));
}

const char* to_string(IntertwinerVerdict::Kind k) {
    switch (k) {
        case IntertwinerVerdict::Kind::Iso: return "Iso";
        case IntertwinerVerdict::Kind::NoHom: return "NoHom";
        case IntertwinerVerdict::Kind::Indeterminate: return "Indeterminate";
    }
    return "?";
}

IntertwinerVerdict intertwiner_solve(const SteinerTensor& t, const SteinerTensor& t2) {
    if (t.dim_v != t2.dim_v) throw DomainError("dimension_mismatch", "tensors live on different spaces");
    const std::size_t i1 = t.dim_i, w1 = t.dim_w, i2 = t2.dim_i, w2 = t2.dim_w;
    // Unknowns: G_I (i2 x i1) row-major, then G_W (w2 x w1) row-major.
    const std::size_t n_gi = i2 * i1, n_unknown = n_gi + w2 * w1;
    Matrix eq(t.dim_v * w2 * i1, n_unknown);
    std::size_t row = 0;
    for (std::size_t j = 0; j < t.dim_v; ++j) {
        const Matrix& a = t.slices[j];
        const Matrix& b = t2.slices[j];
        for (std::size_t p = 0; p < w2; ++p)
            for (std::size_t q = 0; q < i1; ++q, ++row) {
                // (G_W a)[p][q] - (b G_I)[p][q] = 0
                for (std::size_t r = 0; r < w1; ++r)
                    if (sgn(a(r, q)) != 0) eq(row, n_gi + p * w1 + r) += a(r, q);
                for (std::size_t r = 0; r < i2; ++r)
                    if (sgn(b(p, r)) != 0) eq(row, r * i1 + q) -= b(p, r);
            }
    }
    const Matrix ker = mat_kernel(eq);
    IntertwinerVerdict v;
    v.solution_dim = ker.rows();
    if (ker.rows() == 0) {
        v.kind = IntertwinerVerdict::Kind::NoHom;
        return v;
    }
    if (ker.rows() >= 2) {
        v.kind = IntertwinerVerdict::Kind::Indeterminate;
        return v;
    }
    const Vector g = normalize_leading(ker.row(0));
    v.g_i = Matrix(i2, i1);
    v.g_w = Matrix(w2, w1);
    for (std::size_t r = 0; r < i2; ++r)
        for (std::size_t c = 0; c < i1; ++c) v.g_i(r, c) = g[r * i1 + c];
    for (std::size_t r = 0; r < w2; ++r)
        for (std::size_t c = 0; c < w1; ++c) v.g_w(r, c) = g[n_gi + r * w1 + c];
    const bool square = i1 == i2 && w1 == w2;
    const bool invertible = square && (i1 == 0 || mat_det(v.g_i) != 0) && mat_det(v.g_w) != 0;
    v.kind = invertible ? IntertwinerVerdict::Kind::Iso : IntertwinerVerdict::Kind::NoHom;
    return v;
}

}  // namespace logbundle
