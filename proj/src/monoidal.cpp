#include "logbundle/monoidal.hpp"

#include <map>
#include <utility>

#include "logbundle/errors.hpp"

namespace logbundle {

CodepMatrix codependence_matrix(const std::vector<Vector>& xs, const std::vector<Vector>& ys, unsigned d) {
    if (xs.empty() || xs.size() != ys.size()) throw DomainError("length_mismatch", "need matched point lists");
    const std::size_t n = xs.front().size();
    if (d == 0 || xs.size() != n * d) throw DomainError("length_mismatch", "need exactly n d pairs");
    CodepMatrix out{Matrix(n * d, n * d), xs, ys, d};
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i].size() != n || ys[i].size() != 2) throw DomainError("length_mismatch", "bad point dimensions");
        const Vector ymono = moment_vector(d - 1, ys[i][0], ys[i][1]);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t e = 0; e < d; ++e) out.matrix(i, a * d + e) = xs[i][a] * ymono[e];
    }
    return out;
}

Matrix membership_matrix(const std::vector<Vector>& points, const Matrix& z_rows, std::size_t anchor) {
    if (points.size() < 2) throw DomainError("length_mismatch", "need n d + 1 points");
    const std::size_t n = points.front().size() - 1;
    if (n == 0 || (points.size() - 1) % n != 0) throw DomainError("length_mismatch", "need n d + 1 points");
    const unsigned d = static_cast<unsigned>((points.size() - 1) / n);
    const Matrix phi = mat_kernel(Matrix::from_rows({points[anchor]}));
    std::vector<Vector> xs, ys;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i == anchor) continue;
        xs.push_back(phi.apply(points[i]));
        ys.push_back(z_rows.apply(points[i]));
    }
    return codependence_matrix(xs, ys, d).matrix;
}

Rational membership_determinant(const std::vector<Vector>& points, const Matrix& z_rows) {
    return mat_det(membership_matrix(points, z_rows, points.size() - 1));
}

namespace {

std::vector<Vector> raw(const std::vector<ProjPoint>& pts) {
    std::vector<Vector> out;
    for (const auto& p : pts) out.push_back(p.coords());
    return out;
}

bool on_flat(const Flat2& z, const ProjPoint& p) {
    const Vector y = z.rows.apply(p.coords());
    return sgn(y[0]) == 0 && sgn(y[1]) == 0;
}

}  // namespace

bool monoidal_membership(const std::vector<ProjPoint>& points, const Flat2& z) {
    if (points.empty()) throw DomainError("length_mismatch", "need n d + 1 points");
    if (on_flat(z, points.back())) return true;
    return membership_determinant(raw(points), z.rows) == 0;
}

std::size_t monoidal_kernel_dim(const std::vector<ProjPoint>& points, const Flat2& z) {
    if (points.empty()) throw DomainError("length_mismatch", "need n d + 1 points");
    std::size_t anchor = points.size();
    for (std::size_t i = points.size(); i-- > 0;) {
        if (!on_flat(z, points[i])) {
            anchor = i;
            break;
        }
    }
    if (anchor == points.size()) throw DomainError("degenerate", "flat contains every point");
    const Matrix m = membership_matrix(raw(points), z.rows, anchor);
    return m.cols() - mat_rank(m);
}

MultiPoly curve_equation_p2(const std::vector<ProjPoint>& points, unsigned d) {
    if (points.empty() || points.front().n() != 2) throw DomainError("range", "plane curves need n = 2");
    if (d < 1 || points.size() != 2 * d + 1) throw DomainError("length_mismatch", "need 2d+1 points");
    if (!general_position(points)) throw DomainError("general_position", "points not in general position");
    const unsigned deg = d * (d - 1);
    const std::vector<Vector> pts = raw(points);
    auto value_at = [&](long z1, long z2) {
        const Matrix rows{{z1, -1, 0}, {z2, 0, -1}};
        return membership_determinant(pts, rows);
    };
    std::vector<Sample> samples;
    for (long i = 0; i <= static_cast<long>(deg); ++i)
        for (long j = 0; i + j <= static_cast<long>(deg); ++j) samples.push_back({{i, j}, value_at(i, j)});
    // Oversamples off the grid, to catch an inconsistent interpolation.
    for (long k = 1; k <= 10; ++k) {
        const long z1 = -k, z2 = 2 * k + 1;
        samples.push_back({{z1, z2}, value_at(z1, z2)});
    }
    const MultiPoly f = interpolate_dense(3, deg, samples);
    if (f.is_zero()) {
        throw DomainError("whole_grassmannian", "membership determinant vanishes identically");
    }
    return f.primitive();
}

Integer monoid_space_dim(long n, long d, long c) {
    if (d < 2 || c < 2 || c > n) throw DomainError("range", "need d >= 2 and 2 <= c <= n");
    return binomial(c + d - 2, d - 1) * (n - c + 1) + binomial(c + d - 1, d) - 1;
}

Matrix flat_vanishing_conditions(const Matrix& flat_rows, unsigned degree, unsigned order) {
    const std::size_t nv = flat_rows.cols();
    const Matrix k = mat_kernel(flat_rows);  // points of the flat, as rows
    const std::size_t r = k.rows();
    const auto monos = monomials_glex(nv, degree);
    std::vector<MultiPoly> lin;  // x_i as a linear form in the flat parameters
    for (std::size_t i = 0; i < nv; ++i) lin.push_back(MultiPoly::linear(k.col(i)));

    std::map<std::pair<Exponent, Exponent>, Vector> rows;
    for (unsigned ord = 0; ord < order && ord <= degree; ++ord) {
        for (const auto& alpha : monomials_glex(nv, ord)) {
            for (std::size_t m = 0; m < monos.size(); ++m) {
                Exponent e = monos[m];
                Rational coef = 1;
                bool zero = false;
                for (std::size_t i = 0; i < nv; ++i) {
                    if (e[i] < alpha[i]) {
                        zero = true;
                        break;
                    }
                    for (unsigned j = 0; j < alpha[i]; ++j) coef *= e[i] - j;
                    e[i] -= alpha[i];
                }
                if (zero || r == 0) continue;
                const MultiPoly restricted = MultiPoly::monomial(e, coef).compose(lin);
                for (const auto& [lam, c] : restricted.terms()) {
                    auto [it, inserted] = rows.try_emplace({alpha, lam}, Vector(monos.size()));
                    it->second[m] += c;
                }
            }
        }
    }
    std::vector<Vector> out;
    for (auto& [key, row] : rows) out.push_back(std::move(row));
    return Matrix::from_rows(out, monos.size());
}

std::vector<MultiPoly> monoid_basis(const Matrix& flat_rows, unsigned d) {
    if (d < 2) throw DomainError("range", "monoids need d >= 2");
    const Matrix cond = flat_vanishing_conditions(flat_rows, d, d - 1);
    return fit_vanishing(flat_rows.cols(), d, cond);
}

std::optional<MultiPoly> monoid_through_points(const Flat2& z, unsigned d, const std::vector<ProjPoint>& points) {
    const auto basis = monoid_basis(z, d);
    if (basis.empty()) return std::nullopt;
    Matrix ev(points.size(), basis.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t b = 0; b < basis.size(); ++b) ev(i, b) = basis[b].evaluate(points[i].coords());
    const Matrix ker = points.empty() ? Matrix::identity(basis.size()) : mat_kernel(ev);
    if (ker.rows() == 0) return std::nullopt;
    MultiPoly f(z.rows.cols());
    for (std::size_t b = 0; b < basis.size(); ++b) f = f + basis[b].scaled(ker(0, b));
    return f;
}

bool rnc_meets_flat(const RNC& c, const Flat2& z) {
    return binary_resultant(c.pullback(z.rows.row(0)), c.pullback(z.rows.row(1))) == 0;
}

bool exists_quadric_through_curve_and_flat(const RNC& c, const Flat2& z) {
    const std::size_t n = c.n();
    const std::size_t count = monomials_glex(n + 1, 2).size();
    Matrix curve_cond(2 * n + 1, count);
    for (std::size_t k = 0; k < count; ++k) {
        Vector e(count);
        e[k] = 1;
        const BinaryForm f = c.pullback_quadric(e);
        for (std::size_t j = 0; j <= 2 * n; ++j) curve_cond(j, k) = f.coeffs[j];
    }
    const Matrix all = Matrix::vstack(curve_cond, flat_vanishing_conditions(z.rows, 2, 1));
    return mat_rank(all) < count;
}

}  // namespace logbundle
