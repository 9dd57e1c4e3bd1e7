#pragma once

#include <optional>
#include <vector>

#include "logbundle/matrix.hpp"
#include "logbundle/poly.hpp"
#include "logbundle/projective.hpp"
#include "logbundle/rnc.hpp"

namespace logbundle {

struct CodepMatrix {
    Matrix matrix;            // nd x nd
    std::vector<Vector> xs;   // points of P^{n-1}
    std::vector<Vector> ys;   // points of P^1
    unsigned d = 0;
};

// Row i: x_{ia} y0^{d-1-e} y1^e for a = 0..n-1 (major), e = 0..d-1 (minor).
// DomainError("length_mismatch") unless |xs| = |ys| = n d.
CodepMatrix codependence_matrix(const std::vector<Vector>& xs, const std::vector<Vector>& ys, unsigned d);

// Codependence matrix of nd+1 points against the flat with rows z_rows,
// using point `anchor` as the base point: x_i = (phi_1(p_i), ..., phi_n(p_i))
// for the reduced echelon basis phi of forms vanishing at the anchor, and
// y_i = (z_row0 . p_i, z_row1 . p_i).  Works on raw (unnormalized) vectors.
Matrix membership_matrix(const std::vector<Vector>& points, const Matrix& z_rows, std::size_t anchor);

// Determinant of membership_matrix with the last point as anchor.
Rational membership_determinant(const std::vector<Vector>& points, const Matrix& z_rows);

// Some degree-d Z-monoid passes through all nd+1 points.
bool monoidal_membership(const std::vector<ProjPoint>& points, const Flat2& z);

// Dimension of the space of Z-monoids through all the points.
std::size_t monoidal_kernel_dim(const std::vector<ProjPoint>& points, const Flat2& z);

// Equation of the curve of flats (points z of the plane) admitting a monoid
// through the 2d+1 points; degree d(d-1), integer coefficients, content 1,
// positive leading term.  DomainError("whole_grassmannian") if the
// determinant vanishes identically.
MultiPoly curve_equation_p2(const std::vector<ProjPoint>& points, unsigned d);

// C(c+d-2, d-1)(n-c+1) + C(c+d-1, d) - 1 for d >= 2, 2 <= c <= n.
Integer monoid_space_dim(long n, long d, long c);

// Linear functionals on degree-`degree` coefficient vectors (rows indexed by
// monomials_glex(n+1, degree)) whose common kernel is the forms all of whose
// partial derivatives of order < `order` vanish on the linear space cut out by
// the rows of `flat_rows`.
Matrix flat_vanishing_conditions(const Matrix& flat_rows, unsigned degree, unsigned order);

// Degree-d forms vanishing to order d-1 along the flat cut out by the rows.
std::vector<MultiPoly> monoid_basis(const Matrix& flat_rows, unsigned d);
inline std::vector<MultiPoly> monoid_basis(const Flat2& z, unsigned d) { return monoid_basis(z.rows, d); }

std::optional<MultiPoly> monoid_through_points(const Flat2& z, unsigned d, const std::vector<ProjPoint>& points);

bool rnc_meets_flat(const RNC& c, const Flat2& z);
bool exists_quadric_through_curve_and_flat(const RNC& c, const Flat2& z);

}  // namespace logbundle
