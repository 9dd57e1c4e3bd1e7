#pragma once

#include <vector>

#include "logbundle/arrangement.hpp"
#include "logbundle/rnc.hpp"
#include "logbundle/steiner.hpp"

namespace logbundle {

// A point v of P(V) is sent to the binary form whose coefficient vector is
// D M^{-1} v (M = c.coeff, D = diag C(n, j)); gamma(s,t) goes to
// (s X + t Y)^n.  Returns D M^{-1}.
Matrix curve_to_binary_forms(const RNC& c);

// Schwarzenberger tensor of S^nA pulled back to P(V) along the map above:
// slice j = sum_k (D M^{-1})_{kj} (monomial slice k).
SteinerTensor schwarzenberger_on_curve(const RNC& c, long m);

// Parameters (on dual_rnc(c)) of the dual points of `a`.
// DomainError("not_on_curve", indices) when some form is not osculating.
std::vector<Param> dual_parameters(const Arrangement& a, const RNC& c);

// The curve c whose osculating hyperplanes contain every hyperplane of a:
// the dual of the rational normal curve through the dual points.
// DomainError("not_on_curve") when the dual points lie on no common curve.
RNC osculated_curve(const Arrangement& a);

// All m residues of g (S dT - T dS) / prod_j (T_j S - S_j T), g of degree
// m-2, at the points P_k = (b_k : -a_k) of the parameters (a_k : b_k).
Vector residue_vector(const std::vector<Param>& params, const BinaryForm& g);

struct ResidueIntertwiner {
    Matrix alpha;  // S^{m-n-2}A -> I, in the kernel basis of a
    Matrix beta;   // S^{m-2}A -> W, in the basis e_k - e_m
    SteinerTensor source;  // schwarzenberger_on_curve(c, m)
    SteinerTensor target;  // fundamental_tensor(a)
};

// beta(g)_k = residue of g (S dT - T dS) / prod_j (T_j S - S_j T) at the
// point P_k = (b_k : -a_k) of the dual parameter (a_k : b_k), that is
// g(P_k) / prod_{j != k} (S_j T_k - T_j S_k).  alpha is beta applied after
// multiplication by l_q^n, rescaled coordinatewise by mu_k l_q(P_k)^n where
// f_k = mu_k (v -> binary form of v evaluated at P_k); it lands in I.
// Satisfies  beta * source.slices[j] = target.slices[j] * alpha.
// DomainError("precondition") when the data do not match.
ResidueIntertwiner build_residue_intertwiner(const Arrangement& a, const RNC& c,
                                             const std::vector<Param>& params, const Param& q);

// G_W * t.slices[j] == t2.slices[j] * G_I for every j.
bool intertwines(const SteinerTensor& t, const SteinerTensor& t2, const Matrix& g_i, const Matrix& g_w);

}  // namespace logbundle
