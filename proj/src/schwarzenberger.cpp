#include "logbundle/schwarzenberger.hpp"

#include "logbundle/errors.hpp"

namespace logbundle {

Matrix curve_to_binary_forms(const RNC& c) {
    const std::size_t n = c.n();
    Vector d(n + 1);
    for (std::size_t j = 0; j <= n; ++j) d[j] = Rational(binomial(static_cast<long>(n), static_cast<long>(j)));
    return Matrix::diagonal(d) * mat_inverse(c.coeff);
}

SteinerTensor schwarzenberger_on_curve(const RNC& c, long m) {
    const SteinerTensor base = schwarzenberger_tensor(static_cast<long>(c.n()), m);
    const Matrix phi = curve_to_binary_forms(c);
    std::vector<Matrix> slices;
    for (std::size_t j = 0; j < base.dim_v; ++j) {
        Matrix s(base.dim_w, base.dim_i);
        for (std::size_t k = 0; k < base.dim_v; ++k) {
            if (sgn(phi(k, j)) != 0) s = s + base.slices[k].scaled(phi(k, j));
        }
        slices.push_back(std::move(s));
    }
    return SteinerTensor(std::move(slices));
}

std::vector<Param> dual_parameters(const Arrangement& a, const RNC& c) {
    const RNC dual = dual_rnc(c);
    std::vector<Param> out;
    std::vector<std::size_t> missing;
    for (std::size_t k = 0; k < a.m(); ++k) {
        auto p = point_on_rnc(dual, a.form_list()[k]);
        if (!p) {
            missing.push_back(k);
            continue;
        }
        out.push_back(*p);
    }
    if (!missing.empty()) {
        throw DomainError("not_on_curve", "some hyperplanes do not osculate the curve", missing);
    }
    return out;
}

RNC osculated_curve(const Arrangement& a) {
    const std::size_t n = a.n();
    if (n < 2 || a.m() < n + 3) {
        throw DomainError("not_on_curve", "need n >= 2 and at least n+3 hyperplanes");
    }
    const auto& forms = a.form_list();
    const RNC through(rnc_through(std::vector<ProjPoint>(forms.begin(), forms.begin() + static_cast<long>(n) + 3)));
    std::vector<std::size_t> missing;
    for (std::size_t k = n + 3; k < a.m(); ++k) {
        if (!point_on_rnc(through, forms[k])) missing.push_back(k);
    }
    if (!missing.empty()) {
        throw DomainError("not_on_curve", "dual points lie on no common rational normal curve", missing);
    }
    return dual_rnc(through);
}

namespace {

// (S:T) coordinates of the point where the forms of the parameter (a:b)
// vanish: (b : -a).
std::pair<Rational, Rational> root_point(const Param& p) { return {p.t, -p.s}; }

Vector residues_at(const std::vector<std::pair<Rational, Rational>>& pts, const BinaryForm& g) {
    const std::size_t m = pts.size();
    Vector r(m);
    for (std::size_t k = 0; k < m; ++k) {
        Rational denom = 1;
        for (std::size_t j = 0; j < m; ++j)
            if (j != k) denom *= pts[j].first * pts[k].second - pts[j].second * pts[k].first;
        r[k] = g.evaluate(pts[k].first, pts[k].second) / denom;
    }
    return r;
}

}  // namespace

Vector residue_vector(const std::vector<Param>& params, const BinaryForm& g) {
    std::vector<std::pair<Rational, Rational>> pts;
    for (const auto& p : params) pts.push_back(root_point(p));
    return residues_at(pts, g);
}

ResidueIntertwiner build_residue_intertwiner(const Arrangement& a, const RNC& c,
                                             const std::vector<Param>& params, const Param& q) {
    const std::size_t n = a.n(), m = a.m();
    if (c.n() != n) throw DomainError("precondition", "curve and arrangement live in different spaces");
    if (params.size() != m) throw DomainError("precondition", "need one parameter per hyperplane");
    if (m < n + 2) throw DomainError("precondition", "need m >= n+2");
    for (std::size_t i = 0; i < m; ++i) {
        if (params[i] == q) throw DomainError("precondition", "q coincides with a parameter", {i});
        for (std::size_t j = i + 1; j < m; ++j)
            if (params[i] == params[j]) throw DomainError("precondition", "parameters must be distinct", {i, j});
    }

    std::vector<std::pair<Rational, Rational>> pts;
    for (const auto& p : params) pts.push_back(root_point(p));

    // mu_k: f_k = mu_k * (v -> Psi(v)(P_k)).
    const Matrix phi = curve_to_binary_forms(c);
    Vector mu(m);
    for (std::size_t k = 0; k < m; ++k) {
        const Matrix ev = Matrix::from_rows({moment_vector(n, pts[k].first, pts[k].second)});
        const Vector row = (ev * phi).row(0);
        const Vector& f = a.form_list()[k].coords();
        std::size_t lead = 0;
        while (lead <= n && sgn(row[lead]) == 0) ++lead;
        if (lead > n) throw DomainError("precondition", "degenerate evaluation functional", {k});
        mu[k] = f[lead] / row[lead];
        for (std::size_t j = 0; j <= n; ++j) {
            if (f[j] != mu[k] * row[j]) {
                throw DomainError("precondition", "hyperplane does not osculate the curve at its parameter", {k});
            }
        }
    }

    auto residues = [&](const BinaryForm& g) { return residues_at(pts, g); };
    auto basis_form = [](std::size_t degree, std::size_t e) {
        std::vector<Rational> coeffs(degree + 1);
        coeffs[e] = 1;
        return BinaryForm(std::move(coeffs));
    };

    ResidueIntertwiner out;
    out.beta = Matrix(m - 1, m - 1);
    for (std::size_t e = 0; e + 1 < m; ++e) {
        const Vector r = residues(basis_form(m - 2, e));
        for (std::size_t k = 0; k + 1 < m; ++k) out.beta(k, e) = r[k];
    }

    const auto [qs, qt] = root_point(q);
    const BinaryForm lq_n = BinaryForm::vanishing_at(qs, qt).pow(static_cast<unsigned>(n));
    const std::size_t dim_i = m - n - 1;
    const Matrix bt = a.kernel_basis().transpose();
    out.alpha = Matrix(dim_i, dim_i);
    for (std::size_t e = 0; e < dim_i; ++e) {
        Vector r = residues(lq_n * basis_form(m - n - 2, e));
        for (std::size_t k = 0; k < m; ++k) r[k] /= mu[k] * lq_n.evaluate(pts[k].first, pts[k].second);
        const auto coords = mat_solve(bt, r);
        if (!coords) throw DomainError("precondition", "rescaled residues are not a relation");
        for (std::size_t r2 = 0; r2 < dim_i; ++r2) out.alpha(r2, e) = (*coords)[r2];
    }
    out.source = schwarzenberger_on_curve(c, static_cast<long>(m));
    out.target = fundamental_tensor(a);
    return out;
}

bool intertwines(const SteinerTensor& t, const SteinerTensor& t2, const Matrix& g_i, const Matrix& g_w) {
    if (t.dim_v != t2.dim_v) return false;
    for (std::size_t j = 0; j < t.dim_v; ++j) {
        if (!(g_w * t.slices[j] == t2.slices[j] * g_i)) return false;
    }
    return true;
}

}  // namespace logbundle
