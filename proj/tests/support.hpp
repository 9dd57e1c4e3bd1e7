#pragma once

#include <algorithm>
#include <initializer_list>
#include <set>
#include <vector>

#include "logbundle/arrangement.hpp"
#include "logbundle/projective.hpp"
#include "logbundle/rnc.hpp"
#include "logbundle/rng.hpp"

namespace testsupport {

using namespace logbundle;

inline ProjPoint pt(std::initializer_list<long> c) {
    Vector v;
    for (long x : c) v.emplace_back(x);
    return ProjPoint(v);
}

inline std::vector<ProjPoint> random_gp_points(Rng& rng, std::size_t n, std::size_t m, long bound = 12) {
    for (;;) {
        std::vector<ProjPoint> ps;
        for (std::size_t i = 0; i < m; ++i) ps.emplace_back(rng.nonzero_vector(n + 1, bound));
        if (general_position(ps)) return ps;
    }
}

inline Arrangement random_arrangement(Rng& rng, std::size_t n, std::size_t m, long bound = 12) {
    return Arrangement(random_gp_points(rng, n, m, bound));
}

inline RNC random_curve(Rng& rng, std::size_t n, long bound = 4) {
    for (;;) {
        Matrix m = rng.int_matrix(n + 1, n + 1, bound);
        if (mat_det(m) != 0) return RNC(m);
    }
}

// `count` distinct parameters (1:k), k drawn from [-bound, bound].
inline std::vector<Param> distinct_params(Rng& rng, std::size_t count, long bound = 20) {
    std::set<long> used;
    std::vector<Param> out;
    while (out.size() < count) {
        const long k = rng.uniform(-bound, bound);
        if (used.insert(k).second) out.emplace_back(1, k);
    }
    return out;
}

inline std::vector<ProjPoint> points_on(const RNC& c, const std::vector<Param>& params) {
    std::vector<ProjPoint> out;
    for (const auto& p : params) out.push_back(c.at(p));
    return out;
}

inline LineSpan random_line(Rng& rng, std::size_t n, long bound = 9) {
    for (;;) {
        const Matrix rows = rng.int_matrix(2, n + 1, bound);
        if (mat_rank(rows) == 2) return LineSpan(rows);
    }
}

// Line inside hyperplane f: two random points of the hyperplane.
inline LineSpan random_line_in(Rng& rng, const Vector& f, long bound = 9) {
    const Matrix basis = mat_kernel(Matrix::from_rows({f}));
    for (;;) {
        const Matrix c = rng.int_matrix(2, basis.rows(), bound);
        const Matrix rows = c * basis;
        if (mat_rank(rows) == 2) return LineSpan(rows);
    }
}

}  // namespace testsupport
