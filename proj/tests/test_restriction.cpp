#include "doctest.h"

#include <numeric>

#include "logbundle/errors.hpp"
#include "logbundle/monoidal.hpp"
#include "logbundle/quadrics.hpp"
#include "logbundle/restriction.hpp"
#include "support.hpp"

using namespace logbundle;
using testsupport::pt;

namespace {

const std::vector<ProjPoint> kConicPoints{pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1}), pt({1, 1, 1}),
                                         pt({1, 2, 3})};

// The line of P^2 whose equation is h.
LineSpan line_with_equation(const Vector& h) { return LineSpan(mat_kernel(Matrix::from_rows({h}))); }

long total(const std::vector<long>& v) { return std::accumulate(v.begin(), v.end(), 0L); }

}  // namespace

TEST_CASE("restriction pencils") {
    Rng rng(1);
    const SteinerTensor t = fundamental_tensor(testsupport::random_arrangement(rng, 2, 6));
    const MatrixPencil p = restrict_to_line(t, LineSpan(Matrix{{1, 0, 0}, {0, 1, 0}}));
    CHECK(p.t0 == t.slices[0]);
    CHECK(p.t1 == t.slices[1]);

    const LineSpan l = testsupport::random_line(rng, 2);
    const Matrix g{{2, 1}, {1, 1}};
    const MatrixPencil q = restrict_to_line(t, LineSpan(g * l.rows));
    const MatrixPencil base = restrict_to_line(t, l);
    CHECK(q.t0 == base.t0.scaled(2) + base.t1);
    CHECK(q.t1 == base.t0 + base.t1);

    const SteinerTensor small = fundamental_tensor(Arrangement({pt({1, 0}), pt({0, 1}), pt({1, 1})}));
    const MatrixPencil sp = restrict_to_line(small, LineSpan(Matrix{{1, 0}, {0, 1}}));
    CHECK(sp.t0 == Matrix{{1}, {0}});
    CHECK(sp.t1 == Matrix{{0}, {1}});
}

TEST_CASE("splitting types of small arrangements") {
    Rng rng(2);
    const SteinerTensor tangent = fundamental_tensor(testsupport::random_arrangement(rng, 2, 4));
    for (int trial = 0; trial < 20; ++trial) {
        const LineSpan l = testsupport::random_line(rng, 2);
        CHECK(splitting_type(tangent, l) == std::vector<long>{1, 0});
        CHECK_FALSE(is_jumping(tangent, l));
    }
    const SteinerTensor t3 = fundamental_tensor(testsupport::random_arrangement(rng, 3, 5));
    for (int trial = 0; trial < 5; ++trial) CHECK_FALSE(is_jumping(t3, testsupport::random_line(rng, 3)));

    const Arrangement a(kConicPoints);
    const SteinerTensor t = fundamental_tensor(a);
    for (int trial = 0; trial < 10; ++trial) {
        const LineSpan l = testsupport::random_line(rng, 2);
        const bool on_conic = quadrics_through_curve(rnc_through(kConicPoints))[0].evaluate(
                                  mat_kernel(l.rows).row(0)) == 0;
        if (!on_conic) CHECK(splitting_type(t, l) == std::vector<long>{1, 1});
    }
    const LineSpan h1 = line_with_equation(kConicPoints[0].coords());
    CHECK(splitting_type(t, h1) == std::vector<long>{2, 0});
    CHECK(is_jumping(t, h1));
    CHECK(is_super_jumping(t, h1));
}

TEST_CASE("jumping lines of the conic example") {
    const SteinerTensor t = fundamental_tensor(Arrangement(kConicPoints));
    const RNC conic = rnc_through(kConicPoints);
    for (long k = -4; k <= 6; ++k) {
        const ProjPoint on = conic.at(Param(1, k));
        CHECK(is_jumping(t, line_with_equation(on.coords())));
        CHECK(monoidal_membership(kConicPoints, line_to_dual_flat(line_with_equation(on.coords()))));
    }
    for (const auto& off : {pt({1, 1, 2}), pt({2, 5, 7}), pt({1, -1, 4})}) {
        CHECK_FALSE(is_jumping(t, line_with_equation(off.coords())));
    }
}

TEST_CASE("splitting type is invariant and conserves the first Chern class") {
    Rng rng(3);
    for (auto [n, m] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 5}, {2, 6}, {2, 7}, {3, 7}, {3, 8}}) {
        const Arrangement a = testsupport::random_arrangement(rng, n, m);
        const SteinerTensor t = fundamental_tensor(a);
        for (int trial = 0; trial < 4; ++trial) {
            const LineSpan l = trial == 0 ? testsupport::random_line_in(rng, a.forms().row(0))
                                          : testsupport::random_line(rng, n);
            const auto type = splitting_type(t, l);
            CHECK(type.size() == n);
            CHECK(total(type) == static_cast<long>(m - n - 1));
            for (int k = 0; k < 20; ++k) {
                const Matrix g = rng.int_matrix(2, 2, 4);
                if (mat_det(g) == 0) continue;
                CHECK(splitting_type(t, LineSpan(g * l.rows)) == type);
            }
        }
    }
}

TEST_CASE("jumping agrees with monoidal membership") {
    Rng rng(4);
    for (auto [n, m] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 5}, {2, 7}, {3, 7}}) {
        const Arrangement a = testsupport::random_arrangement(rng, n, m);
        const SteinerTensor t = fundamental_tensor(a);
        std::vector<LineSpan> lines;
        for (int k = 0; k < 8; ++k) lines.push_back(testsupport::random_line(rng, n));
        for (std::size_t i = 0; i < m; ++i) lines.push_back(testsupport::random_line_in(rng, a.forms().row(i)));
        for (std::size_t k = 0; k < lines.size(); ++k) {
            const LineSpan& l = lines[k];
            CHECK(is_jumping(t, l) == monoidal_membership(a.form_list(), line_to_dual_flat(l)));
            // Inside some H_i with m > 2n+1 the line is super-jumping with no quadric.
            if (k < 8 || m <= 2 * n + 1) CHECK(is_super_jumping(t, l) == exists_quadric_containing(a.form_list(), line_to_dual_flat(l)));
        }
    }
}

TEST_CASE("super-jumping lines") {
    Rng rng(5);
    const Arrangement a = testsupport::random_arrangement(rng, 2, 7);
    const SteinerTensor t = fundamental_tensor(a);
    for (std::size_t i = 0; i < a.m(); ++i) CHECK(is_super_jumping(t, testsupport::random_line_in(rng, a.forms().row(i))));
    for (int k = 0; k < 10; ++k) CHECK_FALSE(is_super_jumping(t, testsupport::random_line(rng, 2)));
    const Arrangement b = testsupport::random_arrangement(rng, 3, 6);
    const SteinerTensor tb = fundamental_tensor(b);
    for (std::size_t i = 0; i < b.m(); ++i) CHECK(is_super_jumping(tb, testsupport::random_line_in(rng, b.forms().row(i))));
}

TEST_CASE("generic splitting types") {
    CHECK(generic_splitting_type(2, 5) == std::vector<long>{1, 1});
    CHECK(generic_splitting_type(2, 6) == std::vector<long>{2, 1});
    CHECK(generic_splitting_type(3, 9) == std::vector<long>{2, 2, 1});
    CHECK(generic_splitting_type(3, 5) == std::vector<long>{1, 0, 0});
}

TEST_CASE("psi finder") {
    Rng rng(6);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 2);
        const unsigned d = 2 + static_cast<unsigned>(trial % 2);
        const auto params = testsupport::distinct_params(rng, n * d);
        std::vector<Vector> targets;
        for (std::size_t i = 0; i < n * d; ++i) targets.push_back(rng.nonzero_vector(n, 9));
        CHECK(psi_finder(params, targets, d - 1).empty());

        const Matrix planted = rng.int_matrix(n, d, 5);
        std::vector<Vector> through;
        for (const auto& p : params) {
            const Matrix hyper = mat_kernel(Matrix::from_rows({evaluate_map(planted, p)}));
            through.push_back((rng.int_matrix(1, hyper.rows(), 5) * hyper).row(0));
        }
        const auto maps = psi_finder(params, through, d - 1);
        REQUIRE_FALSE(maps.empty());
        std::vector<Vector> rows;
        for (const auto& mp : maps) {
            Vector flat;
            for (std::size_t a = 0; a < n; ++a) {
                const Vector r = mp.row(a);
                flat.insert(flat.end(), r.begin(), r.end());
            }
            rows.push_back(flat);
        }
        const std::size_t before = mat_rank(Matrix::from_rows(rows));
        Vector flat;
        for (std::size_t a = 0; a < n; ++a) {
            const Vector r = planted.row(a);
            flat.insert(flat.end(), r.begin(), r.end());
        }
        rows.push_back(flat);
        CHECK(mat_rank(Matrix::from_rows(rows)) == before);
    }
}

TEST_CASE("codependence matrix") {
    const CodepMatrix c = codependence_matrix({{1, 2}, {2, 4}}, {{1, 0}, {0, 1}}, 1);
    CHECK(mat_det(c.matrix) == 0);
    CHECK(mat_det(codependence_matrix({{1, 2}, {2, 5}}, {{1, 0}, {0, 1}}, 1).matrix) != 0);
    CHECK(mat_det(codependence_matrix({{1, 2}, {1, 2}, {3, 1}, {2, 2}}, {{1, 1}, {1, 1}, {1, 3}, {2, 5}}, 2).matrix) ==
          0);
    CHECK_THROWS_AS(codependence_matrix({{1, 2}}, {{1, 0}}, 2), DomainError);

    Rng rng(7);
    int codependent = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 2);
        const unsigned d = 2 + static_cast<unsigned>((trial / 2) % 2);
        const auto params = testsupport::distinct_params(rng, n * d);
        std::vector<Vector> xs, ys;
        const Matrix planted = rng.int_matrix(n, d, 4);
        for (const auto& p : params) {
            ys.push_back({p.s, p.t});
            if (trial % 2 == 0) {
                xs.push_back(rng.nonzero_vector(n, 9));
            } else {
                const Vector img = evaluate_map(planted, p);
                const Matrix hyper = mat_kernel(Matrix::from_rows({img}));
                Vector x = (rng.int_matrix(1, hyper.rows(), 5) * hyper).row(0);
                if (std::all_of(x.begin(), x.end(), [](const Rational& v) { return sgn(v) == 0; })) x = hyper.row(0);
                xs.push_back(x);
            }
        }
        const bool zero = mat_det(codependence_matrix(xs, ys, d).matrix) == 0;
        codependent += zero;
        CHECK(zero == !psi_finder(params, xs, d - 1).empty());
    }
    CHECK(codependent >= 20);
}

TEST_CASE("connection map") {
    Rng rng(8);
    const Arrangement a = testsupport::random_arrangement(rng, 2, 5);
    const SteinerTensor t = fundamental_tensor(a);
    LineSpan l = testsupport::random_line(rng, 2);
    while (is_jumping(t, l)) l = testsupport::random_line(rng, 2);
    long next = 1;
    auto point_on_l = [&]() {
        for (;; ++next) {
            const ProjPoint p(l.rows.transpose().apply(Vector{1, next}));
            bool off = true;
            for (std::size_t i = 0; i < a.m(); ++i) off = off && dot(a.forms().row(i), p.coords()) != 0;
            if (off) {
                ++next;
                return p;
            }
        }
    };
    const ProjPoint x = point_on_l(), x1 = point_on_l(), x2 = point_on_l();
    for (int trial = 0; trial < 10; ++trial) {
        const ProjPoint other(rng.nonzero_vector(3, 9));
        if (mat_rank(Matrix::from_rows({x.coords(), other.coords()})) < 2) continue;
        const LineSpan lambda = LineSpan::through(x, other);
        CHECK(same_row_space(connection_map(a, l, x, lambda, x).rows, lambda.rows));
        const LineSpan step = connection_map(a, l, x1, connection_map(a, l, x, lambda, x1), x2);
        CHECK(same_row_space(step.rows, connection_map(a, l, x, lambda, x2).rows));
    }

    const Arrangement single({pt({1, 2, 3})});
    const LineSpan line(Matrix{{1, 0, 0}, {0, 1, 1}});
    const ProjPoint base(Vector{1, 1, 1}), target(Vector{1, 3, 3});
    const LineSpan lambda = LineSpan::through(base, pt({0, 0, 1}));
    const Vector f{1, 2, 3};
    const Vector u = lambda.rows.row(0), w = lambda.rows.row(1);
    Vector meet(3);
    for (std::size_t j = 0; j < 3; ++j) meet[j] = dot(f, w) * u[j] - dot(f, u) * w[j];
    CHECK(same_row_space(connection_map(single, line, base, lambda, target).rows,
                         Matrix::from_rows({meet, target.coords()})));
}

TEST_CASE("anchored transport map is unique exactly off jumping lines") {
    Rng rng(9);
    for (auto [n, m] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 5}, {2, 7}, {3, 7}}) {
        const Arrangement a = testsupport::random_arrangement(rng, n, m);
        const SteinerTensor t = fundamental_tensor(a);
        const unsigned d = static_cast<unsigned>((m - 1) / n);
        const Vector last = a.forms().row(m - 1);
        const Matrix k = mat_kernel(Matrix::from_rows({last}));
        for (int trial = 0; trial < 5; ++trial) {
            const LineSpan l = testsupport::random_line(rng, n);
            const Vector u = l.rows.row(0), w = l.rows.row(1);
            std::vector<Param> params;
            std::vector<Vector> targets;
            for (std::size_t i = 0; i + 1 < m; ++i) {
                const Vector fi = a.forms().row(i);
                params.emplace_back(dot(fi, w), -dot(fi, u));
                targets.push_back(k.apply(fi));
            }
            const Param anchor(1, 100 + trial);
            const auto maps = psi_finder(params, targets, d, std::make_pair(anchor, rng.nonzero_vector(n, 5)));
            if (is_jumping(t, l)) continue;
            REQUIRE(maps.size() == 1);
            const Vector at = evaluate_map(maps[0], anchor);
            CHECK(std::any_of(at.begin(), at.end(), [](const Rational& c) { return sgn(c) != 0; }));
        }
    }

    const Arrangement conic(kConicPoints);
    const LineSpan jumping = line_with_equation(rnc_through(kConicPoints).at(Param(1, 5)).coords());
    REQUIRE(is_jumping(fundamental_tensor(conic), jumping));
    std::vector<ProjPoint> on;
    for (long s = 1; on.size() < 2; ++s) {
        const ProjPoint p(jumping.rows.transpose().apply(Vector{1, s}));
        bool off = true;
        for (const auto& f : kConicPoints) off = off && dot(f.coords(), p.coords()) != 0;
        if (off) on.push_back(p);
    }
    const LineSpan lambda = LineSpan::through(on[0], pt({1, 7, -3}));
    CHECK_THROWS_AS(connection_map(conic, jumping, on[0], lambda, on[1]), DomainError);
}
