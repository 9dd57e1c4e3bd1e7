#include "doctest.h"

#include "logbundle/errors.hpp"
#include "logbundle/monoidal.hpp"
#include "logbundle/quadrics.hpp"
#include "support.hpp"

using namespace logbundle;
using testsupport::pt;

namespace {

// The spaces of quadrics through the points and of quadrics containing z meet.
bool quadric_oracle(const std::vector<ProjPoint>& points, const Flat2& z) {
    const std::size_t nv = z.rows.cols();
    const std::size_t count = monomials_glex(nv, 2).size();
    Matrix cond(points.size(), count);
    for (std::size_t i = 0; i < points.size(); ++i) cond.set_row(i, monomial_values(points[i].coords(), 2));
    const auto through = fit_vanishing(nv, 2, cond);
    const auto containing = monoid_basis(z, 2);
    std::vector<Vector> rows;
    for (const auto& q : through) rows.push_back(q.coefficients(2));
    for (const auto& q : containing) rows.push_back(q.coefficients(2));
    if (through.empty() || containing.empty()) return false;
    return mat_rank(Matrix::from_rows(rows)) < through.size() + containing.size();
}

Flat2 random_flat(Rng& rng, std::size_t n) {
    for (;;) {
        const Matrix rows = rng.int_matrix(2, n + 1, 9);
        if (mat_rank(rows) == 2) return Flat2(rows);
    }
}

}  // namespace

TEST_CASE("quadric matrices") {
    MultiPoly q(3);
    q.add_term({2, 0, 0}, 1);
    q.add_term({0, 1, 1}, 3);
    const Matrix s = quadric_matrix(q);
    CHECK(s == Matrix{{1, 0, 0}, {0, 0, Rational(3, 2)}, {0, Rational(3, 2), 0}});
    const Vector v{2, 1, 5};
    CHECK(dot(v, s.apply(v)) == q.evaluate(v));
    CHECK_THROWS_AS(quadric_matrix(MultiPoly::variable(3, 0)), DomainError);
}

TEST_CASE("conditions imposed on quadrics") {
    Rng rng(21);
    for (std::size_t n = 2; n <= 4; ++n) {
        const std::size_t full = (n + 1) * (n + 2) / 2;
        for (std::size_t m = 1; m <= full + 2; ++m) {
            const auto pts = testsupport::random_gp_points(rng, n, m);
            CHECK(conditions_imposed(pts) == std::min(m, full));
        }
    }
    const RNC conic = testsupport::random_curve(rng, 2);
    CHECK(conditions_imposed(testsupport::points_on(conic, testsupport::distinct_params(rng, 7))) == 5);
    const RNC cubic = testsupport::random_curve(rng, 3);
    CHECK(conditions_imposed(testsupport::points_on(cubic, testsupport::distinct_params(rng, 9))) == 7);
    CHECK(conditions_imposed({}) == 0);
}

TEST_CASE("quadric existence matches the brute-force intersection") {
    Rng rng(22);
    int positives = 0;
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
        const std::size_t m = 2 * n - 1 + static_cast<std::size_t>(trial % 4);
        const auto pts = testsupport::random_gp_points(rng, n, m);
        Flat2 z = random_flat(rng, n);
        if (trial % 5 == 0) z = random_flat_through(pts[0], rng.next());
        const bool exists = exists_quadric_containing(pts, z);
        positives += exists;
        CHECK(exists == quadric_oracle(pts, z));

        Matrix g = rng.int_matrix(n + 1, n + 1, 3);
        while (mat_det(g) == 0) g = rng.int_matrix(n + 1, n + 1, 3);
        std::vector<ProjPoint> moved;
        for (const auto& p : pts) moved.emplace_back(g.apply(p.coords()));
        CHECK(exists_quadric_containing(moved, Flat2(z.rows * mat_inverse(g))) == exists);
    }
    CHECK(positives >= 5);
}

TEST_CASE("adjoint points") {
    Rng rng(23);
    const RNC c = testsupport::random_curve(rng, 2);
    const auto params = testsupport::distinct_params(rng, 8);
    auto on = testsupport::points_on(c, params);
    on.pop_back();
    const AdjointResult yes = is_adjoint_sampled(on, c.at(params[7]), 10, 5);
    CHECK(yes.adjoint);
    CHECK_FALSE(yes.witness.has_value());

    const auto generic = testsupport::random_gp_points(rng, 2, 7);
    const AdjointResult no = is_adjoint_sampled(generic, pt({1, 3, 8}), 10, 5);
    CHECK_FALSE(no.adjoint);
    REQUIRE(no.witness.has_value());
    CHECK(dot(no.witness->rows.row(0), Vector{1, 3, 8}) == 0);
    CHECK_FALSE(exists_quadric_containing(generic, *no.witness));
    CHECK_THROWS_AS(is_adjoint_sampled(generic, generic[2], 3, 1), DomainError);

    const AdjointResult again = is_adjoint_sampled(generic, pt({1, 3, 8}), 10, 5);
    CHECK(again.witness->rows == no.witness->rows);
}

TEST_CASE("rational normal curves through many points") {
    Rng rng(24);
    for (std::size_t n = 2; n <= 3; ++n) {
        const RNC c = testsupport::random_curve(rng, n);
        const auto pts = testsupport::points_on(c, testsupport::distinct_params(rng, 2 * n + 3));
        const auto found = castelnuovo_rnc(pts);
        REQUIRE(found.has_value());
        CHECK(same_curve(*found, c));
        CHECK_FALSE(castelnuovo_rnc(testsupport::random_gp_points(rng, n, 2 * n + 3)).has_value());
    }
    const RNC conic = testsupport::random_curve(rng, 2);
    auto seven = testsupport::points_on(conic, testsupport::distinct_params(rng, 6));
    seven.push_back(pt({1, 1, 1}));
    if (general_position(seven)) CHECK_FALSE(castelnuovo_rnc(seven).has_value());
    CHECK_THROWS_AS(castelnuovo_rnc(testsupport::random_gp_points(rng, 2, 6)), DomainError);
    CHECK_THROWS_AS(castelnuovo_rnc({pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1}), pt({1, 1, 0}), pt({1, 2, 3}),
                                     pt({2, 1, 5}), pt({3, 1, 2})}),
                    DomainError);
}

TEST_CASE("Torelli classification") {
    Rng rng(25);
    const auto base = testsupport::random_gp_points(rng, 2, 7);
    std::vector<ProjPoint> shuffled(base.rbegin(), base.rend());
    const TorelliVerdict same = torelli_classify(Arrangement(base), Arrangement(shuffled));
    CHECK(same.kind == TorelliVerdict::Kind::SameArrangement);
    CHECK(same.solver.kind == IntertwinerVerdict::Kind::Iso);

    const TorelliVerdict different =
        torelli_classify(Arrangement(base), Arrangement(testsupport::random_gp_points(rng, 2, 7)));
    CHECK(different.kind == TorelliVerdict::Kind::NonIsomorphic);
    CHECK(different.solver.solution_dim == 0);

    const RNC conic = testsupport::random_curve(rng, 2);
    const auto params = testsupport::distinct_params(rng, 14);
    const std::vector<Param> first(params.begin(), params.begin() + 7), second(params.begin() + 7, params.end());
    const TorelliVerdict common = torelli_classify(Arrangement(testsupport::points_on(conic, first)),
                                                   Arrangement(testsupport::points_on(conic, second)));
    CHECK(common.kind == TorelliVerdict::Kind::CommonVeroneseCurve);
    CHECK(common.solver.solution_dim == 1);
    REQUIRE(common.curve.has_value());
    CHECK(same_curve(*common.curve, conic));
    REQUIRE(common.equation.has_value());
    for (const auto& p : params) CHECK(common.equation->evaluate(conic.at(p).coords()) == 0);

    CHECK_THROWS_AS(torelli_classify(Arrangement(testsupport::random_gp_points(rng, 2, 6)),
                                     Arrangement(testsupport::random_gp_points(rng, 2, 6))),
                    DomainError);
    CHECK_THROWS_AS(torelli_classify(Arrangement(base), Arrangement(testsupport::random_gp_points(rng, 2, 8))),
                    DomainError);
}

TEST_CASE("Torelli in P^3") {
    Rng rng(26);
    const RNC cubic = testsupport::random_curve(rng, 3);
    const auto params = testsupport::distinct_params(rng, 18);
    const TorelliVerdict v =
        torelli_classify(Arrangement(testsupport::points_on(cubic, {params.begin(), params.begin() + 9})),
                         Arrangement(testsupport::points_on(cubic, {params.begin() + 9, params.end()})));
    CHECK(v.kind == TorelliVerdict::Kind::CommonVeroneseCurve);
    CHECK_FALSE(v.equation.has_value());
    const TorelliVerdict w = torelli_classify(Arrangement(testsupport::random_gp_points(rng, 3, 9)),
                                              Arrangement(testsupport::random_gp_points(rng, 3, 9)));
    CHECK(w.kind == TorelliVerdict::Kind::NonIsomorphic);
}
