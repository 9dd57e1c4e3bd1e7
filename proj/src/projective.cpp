#include "logbundle/projective.hpp"

#include <numeric>

#include "logbundle/errors.hpp"
#include "logbundle/poly.hpp"

namespace logbundle {

ProjVec::ProjVec(Vector coords) : coords_(normalize_leading(coords)) {
    if (coords_.empty() || sgn(coords_[0]) == 0) {
        bool any = false;
        for (const auto& x : coords_) any = any || sgn(x) != 0;
        if (!any) throw DomainError("zero_vector", "projective vector must be nonzero");
    }
}

Matrix points_matrix(const std::vector<ProjVec>& pts) {
    std::vector<Vector> rows;
    rows.reserve(pts.size());
    for (const auto& p : pts) rows.push_back(p.coords());
    return Matrix::from_rows(rows);
}

namespace {

// Calls f on every k-subset of {0..m-1} in lexicographic order until f
// returns false.  Returns false iff interrupted.
template <typename F>
bool for_each_subset(std::size_t m, std::size_t k, F&& f) {
    if (k > m) return true;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        if (!f(idx)) return false;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
        if (i == 0) return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

bool general_position(const std::vector<ProjVec>& pts, std::vector<std::size_t>* offending) {
    if (pts.empty()) return true;
    const std::size_t dim = pts.front().size();
    for (const auto& p : pts) {
        if (p.size() != dim) throw InputError("points of different dimensions");
    }
    const Matrix all = points_matrix(pts);
    if (pts.size() <= dim) {
        if (mat_rank(all) == pts.size()) return true;
        // Report a smallest dependent subset.
        for (std::size_t k = 2; k <= pts.size(); ++k) {
            std::vector<std::size_t> found;
            for_each_subset(pts.size(), k, [&](const std::vector<std::size_t>& idx) {
                if (mat_rank(all.select_rows(idx)) < k) {
                    found = idx;
                    return false;
                }
                return true;
            });
            if (!found.empty()) {
                if (offending) *offending = found;
                return false;
            }
        }
        return false;
    }
    std::vector<std::size_t> bad;
    for_each_subset(pts.size(), dim, [&](const std::vector<std::size_t>& idx) {
        if (mat_det(all.select_rows(idx)) == 0) {
            bad = idx;
            return false;
        }
        return true;
    });
    if (bad.empty()) return true;
    if (offending) *offending = bad;
    return false;
}

namespace {

Matrix require_rank2(Matrix r) {
    if (r.rows() != 2 || r.cols() < 2) throw DomainError("degenerate_span", "expected a 2-row matrix");
    if (mat_rank(r) != 2) throw DomainError("degenerate_span", "rows are linearly dependent");
    return r;
}

}  // namespace

Flat2::Flat2(Matrix r) : rows(require_rank2(std::move(r))) {}

LineSpan::LineSpan(Matrix r) : rows(require_rank2(std::move(r))) {}

LineSpan LineSpan::through(const ProjPoint& a, const ProjPoint& b) {
    return LineSpan(Matrix::from_rows({a.coords(), b.coords()}));
}

Vector plucker(const Matrix& m) {
    Vector out;
    for (std::size_t i = 0; i < m.cols(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j) out.push_back(m(0, i) * m(1, j) - m(0, j) * m(1, i));
    return out;
}

Flat2 line_to_dual_flat(const LineSpan& l) { return Flat2(l.rows); }

LineSpan flat_to_dual_line(const Flat2& f) { return LineSpan(f.rows); }

Matrix flat_points(const Flat2& f) { return mat_kernel(f.rows); }

ProjPoint veronese(const ProjPoint& p, unsigned d) {
    if (d == 0) throw std::invalid_argument("veronese: degree must be positive");
    return ProjPoint(monomial_values(p.coords(), d));
}

ProjPoint segre(const ProjPoint& p, const ProjPoint& q) {
    Vector v;
    v.reserve(p.size() * q.size());
    for (const auto& a : p.coords())
        for (const auto& b : q.coords()) v.push_back(a * b);
    return ProjPoint(std::move(v));
}

}  // namespace logbundle
