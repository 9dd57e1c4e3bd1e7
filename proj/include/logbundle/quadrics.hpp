#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "logbundle/arrangement.hpp"
#include "logbundle/poly.hpp"
#include "logbundle/projective.hpp"
#include "logbundle/rnc.hpp"
#include "logbundle/steiner.hpp"

namespace logbundle {

// Symmetric matrix of a quadric given by coefficients on monomials_glex(n+1, 2).
Matrix quadric_matrix(const MultiPoly& q);

// Rank of the degree-2 Veronese evaluation matrix.
std::size_t conditions_imposed(const std::vector<ProjPoint>& points);

// Some quadric passes through all points and contains the flat.
bool exists_quadric_containing(const std::vector<ProjPoint>& points, const Flat2& z);

struct AdjointResult {
    bool adjoint = true;
    std::optional<Flat2> witness;  // a flat through q admitting no quadric
};

// Samples `trials` seeded flats through q.  DomainError("precondition") if q
// is one of the points.
AdjointResult is_adjoint_sampled(const std::vector<ProjPoint>& points, const ProjPoint& q, std::size_t trials,
                                 std::uint64_t seed);

// Random codimension-2 flat through q (two random forms vanishing at q).
Flat2 random_flat_through(const ProjPoint& q, std::uint64_t seed);

// For m >= 2n+3 points in general position: the rational normal curve through
// them when they impose at most 2n+1 conditions on quadrics.
// DomainError("general_position") or ("range") on bad input.
std::optional<RNC> castelnuovo_rnc(const std::vector<ProjPoint>& points);

struct TorelliVerdict {
    enum class Kind { SameArrangement, CommonVeroneseCurve, NonIsomorphic };
    Kind kind = Kind::NonIsomorphic;
    std::optional<RNC> curve;          // through the dual points (CommonVeroneseCurve)
    std::optional<MultiPoly> equation; // its implicit conic when n = 2
    IntertwinerVerdict solver;         // cross-validation result
};

const char* to_string(TorelliVerdict::Kind k);

// Decides whether the logarithmic bundles of two arrangements with the same
// (n, m), m >= 2n+3, are isomorphic, and cross-checks the answer with the
// intertwiner solver.  DomainError("range") when m < 2n+3 or shapes differ,
// ("inconsistency") when the two methods disagree.
TorelliVerdict torelli_classify(const Arrangement& a1, const Arrangement& a2);

}  // namespace logbundle
