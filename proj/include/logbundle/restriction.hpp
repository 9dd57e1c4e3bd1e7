#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "logbundle/arrangement.hpp"
#include "logbundle/projective.hpp"
#include "logbundle/rnc.hpp"
#include "logbundle/steiner.hpp"

namespace logbundle {

struct MatrixPencil {
    Matrix t0;  // fiber map at the first spanning point
    Matrix t1;  // fiber map at the second
    LineSpan span;
};

MatrixPencil restrict_to_line(const SteinerTensor& t, const LineSpan& l);

// Descending (a_1 >= ... >= a_n) with E|_l = sum O(a_i), from the kernel
// dimensions h_k of  W* (x) S^k -> I* (x) S^{k+1}:  #{a_i <= k} = h_k - h_{k-1}.
// DomainError("not_injective", {0} or {1}) when the fiber map at a spanning
// point is not injective.
std::vector<long> splitting_type(const SteinerTensor& t, const LineSpan& l);

// (d repeated r times, d-1 repeated n-r times) with m = n d + 1 + r.
std::vector<long> generic_splitting_type(long n, long m);

// Splitting type differs from the generic one; m is read off as dim W + 1.
bool is_jumping(const SteinerTensor& t, const LineSpan& l);

// 0 occurs in the splitting type (the restricted dual has a section).
bool is_super_jumping(const SteinerTensor& t, const LineSpan& l);

// A map P^1 -> P^{n-1} of degree e, one binary form per coordinate
// (row a = coefficients of coordinate a).
using BinaryMap = Matrix;

// Basis of the maps psi of degree e with targets[i] . psi(params[i]) = 0 and,
// if given, psi(anchor.first) proportional to anchor.second.
std::vector<BinaryMap> psi_finder(const std::vector<Param>& params, const std::vector<Vector>& targets,
                                  unsigned degree, const std::optional<std::pair<Param, Vector>>& anchor = {});

Vector evaluate_map(const BinaryMap& psi, const Param& p);

// Parallel transport of the line lambda through x to a line through x2,
// along l, for an arrangement with m = n d + 1.  DomainError("range") for
// other m, ("precondition") when x or x2 is off l or on some hyperplane,
// ("jumping") when no unique transport map sends x to where lambda meets H_m.
LineSpan connection_map(const Arrangement& a, const LineSpan& l, const ProjPoint& x, const LineSpan& lambda,
                        const ProjPoint& x2);

}  // namespace logbundle
