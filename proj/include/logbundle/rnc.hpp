#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "logbundle/matrix.hpp"
#include "logbundle/poly.hpp"
#include "logbundle/projective.hpp"

namespace logbundle {

// Projective parameter (s:t), normalized with first nonzero entry 1.
struct Param {
    Rational s;
    Rational t;
    Param() : s(1), t(0) {}
    Param(Rational s_, Rational t_);
    bool operator==(const Param& o) const = default;
};

// (s^n, s^{n-1} t, ..., t^n).
Vector moment_vector(std::size_t n, const Rational& s, const Rational& t);

// Rational normal curve gamma(s,t) = coeff * moment_vector(n, s, t).
struct RNC {
    Matrix coeff;
    RNC() = default;
    // Throws DomainError("singular_curve") when coeff is not invertible.
    explicit RNC(Matrix m);
    std::size_t n() const { return coeff.rows() - 1; }
    ProjPoint at(const Param& p) const;
    // The binary form of degree n obtained by substituting gamma into a
    // linear form.
    BinaryForm pullback(std::span<const Rational> form) const;
    // Degree-2n binary form obtained by substituting gamma into a quadric
    // (coefficients on monomials_glex(n+1, 2)).
    BinaryForm pullback_quadric(std::span<const Rational> coeffs) const;
};

// The unique curve through n+3 points in general position (n >= 2).  Every
// input is verified to lie on the result.  DomainError("degenerate") when the
// configuration is not in general position.
RNC rnc_through(const std::vector<ProjPoint>& points);

// Parameter of p on c, if p lies on c.
std::optional<Param> point_on_rnc(const RNC& c, const ProjPoint& p);

// Curve of osculating hyperplanes: its point at (a:b) is the hyperplane with
// contact order n with c at (a:b).  For the standard curve that hyperplane
// has coordinates (-1)^k C(n,k) a^k b^{n-k}.
RNC dual_rnc(const RNC& c);

// Equal images: n+3 points of one curve all lie on the other.
bool same_curve(const RNC& a, const RNC& b);

// Basis of the quadrics containing the curve (coefficients on
// monomials_glex(n+1, 2)).
std::vector<MultiPoly> quadrics_through_curve(const RNC& c);

}  // namespace logbundle
