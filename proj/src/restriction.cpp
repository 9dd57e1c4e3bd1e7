#include "logbundle/restriction.hpp"

#include <algorithm>
#include <functional>

#include "logbundle/errors.hpp"

namespace logbundle {

MatrixPencil restrict_to_line(const SteinerTensor& t, const LineSpan& l) {
    if (l.rows.cols() != t.dim_v) throw DomainError("shape", "line and tensor live in different spaces");
    return {fiber_map(t, l.rows.row(0)), fiber_map(t, l.rows.row(1)), l};
}

namespace {

// dim ker of  W* (x) S^k -> I* (x) S^{k+1},
// w_b (x) s^{k-e} t^e  |->  sum_i T0[b][i] (i, s^{k+1-e} t^e) + T1[b][i] (i, s^{k-e} t^{e+1}).
std::size_t dual_sections(const MatrixPencil& p, std::size_t k) {
    const std::size_t dw = p.t0.rows(), di = p.t0.cols();
    Matrix phi(di * (k + 2), dw * (k + 1));
    for (std::size_t b = 0; b < dw; ++b)
        for (std::size_t e = 0; e <= k; ++e) {
            const std::size_t col = b * (k + 1) + e;
            for (std::size_t i = 0; i < di; ++i) {
                phi(i * (k + 2) + e, col) += p.t0(b, i);
                phi(i * (k + 2) + e + 1, col) += p.t1(b, i);
            }
        }
    return phi.cols() - mat_rank(phi);
}

}  // namespace

std::vector<long> splitting_type(const SteinerTensor& t, const LineSpan& l) {
    const MatrixPencil p = restrict_to_line(t, l);
    if (mat_rank(p.t0) < t.dim_i) throw DomainError("not_injective", "fiber map not injective at a spanning point", {0});
    if (mat_rank(p.t1) < t.dim_i) throw DomainError("not_injective", "fiber map not injective at a spanning point", {1});
    const std::size_t rank = t.dim_w - t.dim_i;
    std::vector<long> type;
    std::size_t prev_h = 0, prev_count = 0;
    for (std::size_t k = 0; type.size() < rank && k <= t.dim_i; ++k) {
        const std::size_t h = dual_sections(p, k);
        const std::size_t count = h - prev_h;
        for (std::size_t c = prev_count; c < count && type.size() < rank; ++c) type.push_back(static_cast<long>(k));
        prev_h = h;
        prev_count = count;
    }
    if (type.size() != rank) throw DomainError("not_injective", "restriction is not a vector bundle of the expected rank");
    std::sort(type.begin(), type.end(), std::greater<>());
    return type;
}

std::vector<long> generic_splitting_type(long n, long m) {
    const auto [d, r] = normalization_split(n, m);
    std::vector<long> type(static_cast<std::size_t>(r), d);
    type.resize(static_cast<std::size_t>(n), d - 1);
    return type;
}

bool is_jumping(const SteinerTensor& t, const LineSpan& l) {
    const long n = static_cast<long>(t.n());
    const long m = static_cast<long>(t.dim_w) + 1;
    return splitting_type(t, l) != generic_splitting_type(n, m);
}

bool is_super_jumping(const SteinerTensor& t, const LineSpan& l) {
    const auto type = splitting_type(t, l);
    return std::find(type.begin(), type.end(), 0L) != type.end();
}

Vector evaluate_map(const BinaryMap& psi, const Param& p) {
    const std::size_t e = psi.cols() - 1;
    return psi.apply(moment_vector(e, p.s, p.t));
}

std::vector<BinaryMap> psi_finder(const std::vector<Param>& params, const std::vector<Vector>& targets,
                                  unsigned degree, const std::optional<std::pair<Param, Vector>>& anchor) {
    if (params.size() != targets.size()) throw DomainError("length_mismatch", "one target per parameter");
    std::size_t n = 0;
    if (!targets.empty()) n = targets.front().size();
    else if (anchor) n = anchor->second.size();
    if (n == 0) throw DomainError("shape", "cannot infer the target dimension");
    const std::size_t width = degree + 1;
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < params.size(); ++i) {
        const Vector mono = moment_vector(degree, params[i].s, params[i].t);
        Vector row(n * width);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t k = 0; k < width; ++k) row[a * width + k] = targets[i][a] * mono[k];
        rows.push_back(std::move(row));
    }
    if (anchor) {
        const Vector mono = moment_vector(degree, anchor->first.s, anchor->first.t);
        const Matrix ann = mat_kernel(Matrix::from_rows({anchor->second}));
        for (std::size_t h = 0; h < ann.rows(); ++h) {
            Vector row(n * width);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t k = 0; k < width; ++k) row[a * width + k] = ann(h, a) * mono[k];
            rows.push_back(std::move(row));
        }
    }
    const Matrix ker = rows.empty() ? Matrix::identity(n * width) : mat_kernel(Matrix::from_rows(rows));
    std::vector<BinaryMap> out;
    for (std::size_t r = 0; r < ker.rows(); ++r) {
        BinaryMap psi(n, width);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t k = 0; k < width; ++k) psi(a, k) = ker(r, a * width + k);
        out.push_back(std::move(psi));
    }
    return out;
}

namespace {

// Parameter (s:t) with p = s u + t w for the rows u, w of l.
Param param_on_line(const LineSpan& l, const ProjPoint& p) {
    auto sol = mat_solve(l.rows.transpose(), p.coords());
    if (!sol) throw DomainError("precondition", "point is not on the line");
    return Param((*sol)[0], (*sol)[1]);
}

}  // namespace

LineSpan connection_map(const Arrangement& a, const LineSpan& l, const ProjPoint& x, const LineSpan& lambda,
                        const ProjPoint& x2) {
    const std::size_t n = a.n(), m = a.m();
    if ((m - 1) % n != 0) throw DomainError("range", "connection needs m = n d + 1");
    const unsigned d = static_cast<unsigned>((m - 1) / n);
    const Matrix& f = a.forms();
    for (std::size_t i = 0; i < m; ++i) {
        const Vector fi = f.row(i);
        if (dot(fi, x.coords()) == 0 || dot(fi, x2.coords()) == 0) {
            throw DomainError("precondition", "base points must avoid every hyperplane", {i});
        }
    }
    const Param px = param_on_line(l, x), px2 = param_on_line(l, x2);
    if (mat_rank(Matrix::vstack(lambda.rows, Matrix::from_rows({x.coords()}))) != 2) {
        throw DomainError("precondition", "lambda must pass through x");
    }
    const Vector last = f.row(m - 1);
    const Matrix k = mat_kernel(Matrix::from_rows({last}));  // n x (n+1), rows span H_m
    const Matrix kt = k.transpose();

    const Vector u = l.rows.row(0), w = l.rows.row(1);
    std::vector<Param> params;
    std::vector<Vector> targets;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        const Vector fi = f.row(i);
        params.emplace_back(dot(fi, w), -dot(fi, u));
        targets.push_back(k.apply(fi));
    }
    const Vector la = lambda.rows.row(0), lb = lambda.rows.row(1);
    Vector meet(n + 1);
    const Rational fa = dot(last, la), fb = dot(last, lb);
    for (std::size_t j = 0; j <= n; ++j) meet[j] = fb * la[j] - fa * lb[j];
    const auto meet_coords = mat_solve(kt, meet);
    if (!meet_coords || std::all_of(meet.begin(), meet.end(), [](const Rational& c) { return sgn(c) == 0; })) {
        throw DomainError("precondition", "lambda lies in the last hyperplane");
    }
    const auto maps = psi_finder(params, targets, d, std::make_pair(px, *meet_coords));
    // On a jumping line a codependent map of degree d-1 times a form vanishing
    // at x also meets the anchor condition, with psi(x) = 0.
    const Vector at_x = maps.size() == 1 ? evaluate_map(maps[0], px) : Vector{};
    if (maps.size() != 1 || std::all_of(at_x.begin(), at_x.end(), [](const Rational& c) { return sgn(c) == 0; })) {
        throw DomainError("jumping", "no unique transport map; the line is jumping");
    }
    const Vector image = kt.apply(evaluate_map(maps[0], px2));
    return LineSpan(Matrix::from_rows({x2.coords(), image}));
}

}  // namespace logbundle
