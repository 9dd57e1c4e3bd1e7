#include "logbundle/rnc.hpp"

#include <algorithm>

#include "logbundle/errors.hpp"

namespace logbundle {

Param::Param(Rational s_, Rational t_) : s(std::move(s_)), t(std::move(t_)) {
    if (sgn(s) != 0) {
        t /= s;
        s = 1;
    } else if (sgn(t) != 0) {
        t = 1;
    } else {
        throw DomainError("zero_vector", "parameter (0:0) is not a point of P^1");
    }
}

Vector moment_vector(std::size_t n, const Rational& s, const Rational& t) {
    Vector v(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        Rational x = 1;
        for (std::size_t i = 0; i < n - k; ++i) x *= s;
        for (std::size_t i = 0; i < k; ++i) x *= t;
        v[k] = x;
    }
    return v;
}

RNC::RNC(Matrix m) : coeff(std::move(m)) {
    if (coeff.rows() != coeff.cols() || coeff.rows() < 2 || mat_det(coeff) == 0) {
        throw DomainError("singular_curve", "curve coefficient matrix must be invertible");
    }
}

ProjPoint RNC::at(const Param& p) const { return ProjPoint(coeff.apply(moment_vector(n(), p.s, p.t))); }

BinaryForm RNC::pullback(std::span<const Rational> form) const {
    const Matrix row = Matrix::from_rows({Vector(form.begin(), form.end())});
    return BinaryForm((row * coeff).row(0));
}

BinaryForm RNC::pullback_quadric(std::span<const Rational> coeffs) const {
    const std::size_t d = n();
    const auto monos = monomials_glex(d + 1, 2);
    std::vector<BinaryForm> coords;
    for (std::size_t i = 0; i <= d; ++i) coords.emplace_back(coeff.row(i));
    BinaryForm acc(std::vector<Rational>(2 * d + 1));
    for (std::size_t k = 0; k < monos.size(); ++k) {
        if (sgn(coeffs[k]) == 0) continue;
        std::vector<std::size_t> vars;
        for (std::size_t i = 0; i <= d; ++i)
            for (unsigned e = 0; e < monos[k][i]; ++e) vars.push_back(i);
        acc = acc + (coords[vars[0]] * coords[vars[1]]).scaled(coeffs[k]);
    }
    return acc;
}

std::optional<Param> point_on_rnc(const RNC& c, const ProjPoint& p) {
    if (p.size() != c.coeff.rows()) return std::nullopt;
    const Vector y = mat_solve(c.coeff, p.coords()).value();
    const std::size_t n = c.n();
    if (sgn(y[0]) != 0) {
        const Rational tau = y[1] / y[0];
        Rational expect = y[0];
        for (std::size_t k = 0; k <= n; ++k) {
            if (y[k] != expect) return std::nullopt;
            expect *= tau;
        }
        return Param(1, tau);
    }
    for (std::size_t k = 0; k < n; ++k)
        if (sgn(y[k]) != 0) return std::nullopt;
    return Param(0, 1);
}

RNC rnc_through(const std::vector<ProjPoint>& points) {
    if (points.size() < 3) throw DomainError("degenerate", "need n+3 points");
    const std::size_t n = points.size() - 3;
    if (n < 2) throw DomainError("degenerate", "rational normal curves need n >= 2");
    for (const auto& p : points) {
        if (p.n() != n) throw DomainError("degenerate", "need exactly n+3 points in P^n");
    }
    std::vector<Vector> frame;
    for (std::size_t i = 0; i <= n; ++i) frame.push_back(points[i].coords());
    const Matrix q = Matrix::from_cols(frame);
    if (mat_det(q) == 0) throw DomainError("degenerate", "first n+1 points are dependent");
    const Vector c = mat_solve(q, points[n + 1].coords()).value();
    for (std::size_t i = 0; i <= n; ++i) {
        if (sgn(c[i]) == 0) throw DomainError("degenerate", "points not in general position");
    }
    const Matrix a = q * Matrix::diagonal(c);
    const Vector r = mat_solve(a, points[n + 2].coords()).value();
    Vector b(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (sgn(r[i]) == 0) throw DomainError("degenerate", "points not in general position");
        b[i] = 1 / r[i];
    }
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            if (b[i] == b[j]) throw DomainError("degenerate", "points not in general position");
    // Coordinate i is prod_{j != i} (t - b_j s): it vanishes at every
    // (1:b_j) except j = i, equals 1 at (0:1) and is proportional to r_i at
    // (1:0).
    Matrix nmat(n + 1, n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        BinaryForm f(std::vector<Rational>{1});
        for (std::size_t j = 0; j <= n; ++j) {
            if (j != i) f = f * BinaryForm(std::vector<Rational>{-b[j], 1});
        }
        nmat.set_row(i, f.coeffs);
    }
    RNC curve(a * nmat);
    for (const auto& p : points) {
        if (!point_on_rnc(curve, p)) throw DomainError("degenerate", "interpolated curve misses an input point");
    }
    return curve;
}

RNC dual_rnc(const RNC& c) {
    const std::size_t n = c.n();
    Matrix r(n + 1, n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        Rational v(binomial(static_cast<long>(n), static_cast<long>(k)));
        r(k, n - k) = k % 2 == 0 ? v : Rational(-v);
    }
    return RNC(mat_inverse(c.coeff).transpose() * r);
}

bool same_curve(const RNC& a, const RNC& b) {
    if (a.n() != b.n()) return false;
    for (long k = 0; k < static_cast<long>(a.n()) + 3; ++k) {
        if (!point_on_rnc(b, a.at(Param(1, k)))) return false;
    }
    return point_on_rnc(b, a.at(Param(0, 1))).has_value();
}

std::vector<MultiPoly> quadrics_through_curve(const RNC& c) {
    const std::size_t n = c.n();
    const std::size_t count = monomials_glex(n + 1, 2).size();
    Matrix cond(2 * n + 1, count);
    for (std::size_t k = 0; k < count; ++k) {
        Vector e(count);
        e[k] = 1;
        const BinaryForm f = c.pullback_quadric(e);
        for (std::size_t j = 0; j <= 2 * n; ++j) cond(j, k) = f.coeffs[j];
    }
    return fit_vanishing(n + 1, 2, cond);
}

}  // namespace logbundle
