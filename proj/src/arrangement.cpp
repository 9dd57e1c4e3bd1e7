#include "logbundle/arrangement.hpp"

#include <algorithm>

#include "logbundle/errors.hpp"

namespace logbundle {

Arrangement::Arrangement(std::vector<HyperplaneForm> forms) : forms_(std::move(forms)) {
    if (forms_.empty()) throw DomainError("general_position", "empty arrangement");
    std::vector<std::size_t> bad;
    if (!general_position(forms_, &bad)) {
        throw DomainError("general_position", "hyperplanes are not in general position", bad);
    }
    matrix_ = points_matrix(forms_);
    kernel_ = mat_kernel(matrix_.transpose());
}

std::vector<HyperplaneForm> Arrangement::sorted_forms() const {
    auto s = forms_;
    std::sort(s.begin(), s.end());
    return s;
}

Arrangement new_arrangement(std::vector<HyperplaneForm> forms) { return Arrangement(std::move(forms)); }

Arrangement associated(const Arrangement& a) {
    if (a.m() < a.n() + 2) throw DomainError("range", "association needs m >= n+2");
    const Matrix& b = a.kernel_basis();
    std::vector<HyperplaneForm> forms;
    for (std::size_t i = 0; i < a.m(); ++i) forms.emplace_back(b.col(i));
    return Arrangement(std::move(forms));
}

SteinerTensor fundamental_tensor(const Arrangement& a) {
    const std::size_t n = a.n(), m = a.m();
    if (m < n + 2) throw DomainError("range", "fundamental tensor needs m >= n+2");
    const Matrix& b = a.kernel_basis();
    const Matrix& f = a.forms();
    std::vector<Matrix> slices;
    for (std::size_t j = 0; j <= n; ++j) {
        Matrix s(m - 1, b.rows());
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t k = 0; k + 1 < m; ++k) s(k, r) = b(r, k) * f(k, j);
        slices.push_back(std::move(s));
    }
    return SteinerTensor(std::move(slices));
}

namespace {

// Rank of the full set equals m-1 and every (m-1)-subset is independent.
bool minimally_dependent(const Matrix& rows) {
    const std::size_t m = rows.rows();
    if (m == 0 || mat_rank(rows) != m - 1) return false;
    std::vector<std::size_t> idx;
    for (std::size_t skip = 0; skip < m; ++skip) {
        idx.clear();
        for (std::size_t i = 0; i < m; ++i)
            if (i != skip) idx.push_back(i);
        if (mat_rank(rows.select_rows(idx)) != m - 1) return false;
    }
    return true;
}

}  // namespace

bool is_associated_pair(const std::vector<ProjPoint>& p, const std::vector<ProjPoint>& q) {
    if (p.size() != q.size()) throw DomainError("length_mismatch", "configurations differ in length");
    std::vector<ProjPoint> s;
    for (std::size_t i = 0; i < p.size(); ++i) s.push_back(segre(p[i], q[i]));
    return minimally_dependent(points_matrix(s));
}

bool is_self_associated(const std::vector<ProjPoint>& p) {
    if (p.empty() || p.size() != 2 * p.front().n() + 2) {
        throw DomainError("count", "self-association needs exactly 2n+2 points");
    }
    std::vector<ProjPoint> v;
    for (const auto& x : p) v.push_back(veronese(x, 2));
    return minimally_dependent(points_matrix(v));
}

std::optional<Matrix> projective_equivalence(const std::vector<ProjVec>& a, const std::vector<ProjVec>& b) {
    if (a.size() != b.size() || a.empty()) return std::nullopt;
    const std::size_t da = a.front().size(), db = b.front().size();
    if (da != db) return std::nullopt;
    const std::size_t m = a.size(), d = da;
    // Unknowns: g (d x d, row-major), then c_1..c_m.  g a_i - c_i b_i = 0.
    Matrix eq(m * d, d * d + m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t r = 0; r < d; ++r) {
            const std::size_t row = i * d + r;
            for (std::size_t c = 0; c < d; ++c) eq(row, r * d + c) = a[i][c];
            eq(row, d * d + i) = -b[i][r];
        }
    const Matrix ker = mat_kernel(eq);
    if (ker.rows() != 1) return std::nullopt;
    Matrix g(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) g(r, c) = ker(0, r * d + c);
    if (mat_det(g) == 0) return std::nullopt;
    return g;
}

}  // namespace logbundle
