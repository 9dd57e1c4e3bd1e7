#include "logbundle/quadrics.hpp"

#include "logbundle/errors.hpp"
#include "logbundle/monoidal.hpp"
#include "logbundle/rng.hpp"

namespace logbundle {

Matrix quadric_matrix(const MultiPoly& q) {
    const std::size_t nv = q.n_vars();
    Matrix s(nv, nv);
    for (const auto& [e, c] : q.terms()) {
        std::vector<std::size_t> vars;
        for (std::size_t i = 0; i < nv; ++i)
            for (unsigned k = 0; k < e[i]; ++k) vars.push_back(i);
        if (vars.size() != 2) throw DomainError("degree", "not a quadratic form");
        if (vars[0] == vars[1]) {
            s(vars[0], vars[0]) += c;
        } else {
            s(vars[0], vars[1]) += c / 2;
            s(vars[1], vars[0]) += c / 2;
        }
    }
    return s;
}

namespace {

Matrix veronese_rows(const std::vector<ProjPoint>& points) {
    std::vector<Vector> rows;
    for (const auto& p : points) rows.push_back(monomial_values(p.coords(), 2));
    const std::size_t count = points.empty() ? 0 : rows.front().size();
    return Matrix::from_rows(rows, count);
}

}  // namespace

std::size_t conditions_imposed(const std::vector<ProjPoint>& points) {
    if (points.empty()) return 0;
    return mat_rank(veronese_rows(points));
}

bool exists_quadric_containing(const std::vector<ProjPoint>& points, const Flat2& z) {
    const std::size_t count = monomials_glex(z.rows.cols(), 2).size();
    const Matrix cond = Matrix::vstack(veronese_rows(points), flat_vanishing_conditions(z.rows, 2, 1));
    return mat_rank(cond) < count;
}

Flat2 random_flat_through(const ProjPoint& q, std::uint64_t seed) {
    Rng rng(seed);
    const Matrix forms = mat_kernel(Matrix::from_rows({q.coords()}));
    for (;;) {
        const Matrix rows = rng.int_matrix(2, forms.rows(), 9) * forms;
        if (mat_rank(rows) == 2) return Flat2(rows);
    }
}

AdjointResult is_adjoint_sampled(const std::vector<ProjPoint>& points, const ProjPoint& q, std::size_t trials,
                                 std::uint64_t seed) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i] == q) throw DomainError("precondition", "q coincides with one of the points", {i});
    }
    Rng rng(seed);
    for (std::size_t k = 0; k < trials; ++k) {
        const Flat2 z = random_flat_through(q, rng.next());
        if (!exists_quadric_containing(points, z)) return {false, z};
    }
    return {true, std::nullopt};
}

std::optional<RNC> castelnuovo_rnc(const std::vector<ProjPoint>& points) {
    if (points.empty()) throw DomainError("range", "no points");
    const std::size_t n = points.front().n();
    if (n < 2 || points.size() < 2 * n + 3) throw DomainError("range", "need m >= 2n+3 points, n >= 2");
    std::vector<std::size_t> bad;
    if (!general_position(points, &bad)) throw DomainError("general_position", "points not in general position", bad);
    if (conditions_imposed(points) > 2 * n + 1) return std::nullopt;
    const RNC c = rnc_through(std::vector<ProjPoint>(points.begin(), points.begin() + static_cast<long>(n) + 3));
    for (const auto& p : points) {
        if (!point_on_rnc(c, p)) return std::nullopt;
    }
    return c;
}

const char* to_string(TorelliVerdict::Kind k) {
    switch (k) {
        case TorelliVerdict::Kind::SameArrangement: return "SameArrangement";
        case TorelliVerdict::Kind::CommonVeroneseCurve: return "CommonVeroneseCurve";
        case TorelliVerdict::Kind::NonIsomorphic: return "NonIsomorphic";
    }
    return "?";
}

TorelliVerdict torelli_classify(const Arrangement& a1, const Arrangement& a2) {
    const std::size_t n = a1.n(), m = a1.m();
    if (a2.n() != n || a2.m() != m) throw DomainError("range", "arrangements differ in (n, m)");
    if (n < 2 || m < 2 * n + 3) throw DomainError("range", "classification needs n >= 2 and m >= 2n+3");
    TorelliVerdict v;
    if (a1.sorted_forms() == a2.sorted_forms()) {
        v.kind = TorelliVerdict::Kind::SameArrangement;
    } else if (auto c = castelnuovo_rnc(a1.form_list())) {
        bool all_on = true;
        for (const auto& f : a2.form_list()) all_on = all_on && point_on_rnc(*c, f).has_value();
        if (all_on) {
            v.kind = TorelliVerdict::Kind::CommonVeroneseCurve;
            v.curve = c;
            if (n == 2) v.equation = quadrics_through_curve(*c).at(0).primitive();
        }
    }
    v.solver = intertwiner_solve(fundamental_tensor(a1), fundamental_tensor(a2));
    const bool iso_expected = v.kind != TorelliVerdict::Kind::NonIsomorphic;
    const bool iso_found = v.solver.kind == IntertwinerVerdict::Kind::Iso;
    if (v.solver.kind == IntertwinerVerdict::Kind::Indeterminate || iso_expected != iso_found) {
        throw DomainError("inconsistency", std::string("classifier says ") + to_string(v.kind) + ", solver says " +
                                               to_string(v.solver.kind));
    }
    return v;
}

}  // namespace logbundle
