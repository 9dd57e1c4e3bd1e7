#include "logbundle/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "logbundle/errors.hpp"

namespace logbundle {

namespace {

unsigned total(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

}  // namespace

bool GlexFirst::operator()(const Exponent& a, const Exponent& b) const {
    const unsigned da = total(a), db = total(b);
    if (da != db) return da > db;
    return a > b;
}

std::vector<Exponent> monomials_glex(std::size_t n_vars, unsigned degree) {
    if (n_vars == 0) return degree == 0 ? std::vector<Exponent>{Exponent{}} : std::vector<Exponent>{};
    if (n_vars == 1) return {Exponent{degree}};
    std::vector<Exponent> out;
    for (unsigned e0 = degree + 1; e0-- > 0;) {
        for (auto& rest : monomials_glex(n_vars - 1, degree - e0)) {
            Exponent e;
            e.reserve(n_vars);
            e.push_back(e0);
            e.insert(e.end(), rest.begin(), rest.end());
            out.push_back(std::move(e));
        }
    }
    return out;
}

namespace {

Rational monomial_at(const Exponent& e, std::span<const Rational> point) {
    Rational v = 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (unsigned k = 0; k < e[i]; ++k) v *= point[i];
    }
    return v;
}

}  // namespace

Vector monomial_values(std::span<const Rational> point, unsigned degree) {
    const auto monos = monomials_glex(point.size(), degree);
    Vector out;
    out.reserve(monos.size());
    for (const auto& e : monos) out.push_back(monomial_at(e, point));
    return out;
}

MultiPoly MultiPoly::constant(std::size_t n_vars, const Rational& c) {
    MultiPoly p(n_vars);
    p.add_term(Exponent(n_vars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t n_vars, std::size_t i) {
    Exponent e(n_vars, 0);
    e.at(i) = 1;
    return monomial(e);
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Rational& c) {
    MultiPoly p(e.size());
    p.add_term(e, c);
    return p;
}

MultiPoly MultiPoly::linear(std::span<const Rational> coeffs) {
    MultiPoly p(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Exponent e(coeffs.size(), 0);
        e[i] = 1;
        p.add_term(e, coeffs[i]);
    }
    return p;
}

MultiPoly MultiPoly::from_coefficients(std::size_t n_vars, unsigned degree,
                                       std::span<const Rational> coeffs) {
    const auto monos = monomials_glex(n_vars, degree);
    if (coeffs.size() != monos.size()) throw std::invalid_argument("from_coefficients: length");
    MultiPoly p(n_vars);
    for (std::size_t k = 0; k < monos.size(); ++k) p.add_term(monos[k], coeffs[k]);
    return p;
}

int MultiPoly::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(total(terms_.begin()->first));
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const unsigned d = total(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& kv) { return total(kv.first) == d; });
}

Rational MultiPoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
    if (e.size() != n_vars_) throw std::invalid_argument("add_term: exponent length");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Vector MultiPoly::coefficients(unsigned degree) const {
    const auto monos = monomials_glex(n_vars_, degree);
    Vector out;
    out.reserve(monos.size());
    for (const auto& e : monos) out.push_back(coefficient(e));
    return out;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
    if (point.size() != n_vars_) throw std::invalid_argument("evaluate: point length");
    Rational acc = 0;
    for (const auto& [e, c] : terms_) acc += c * monomial_at(e, point);
    return acc;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    MultiPoly d(n_vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponent f = e;
        --f[var];
        d.add_term(f, c * e[var]);
    }
    return d;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& polys) const {
    if (polys.size() != n_vars_) throw std::invalid_argument("compose: arity");
    const std::size_t target = polys.empty() ? 0 : polys.front().n_vars();
    std::vector<std::vector<MultiPoly>> powers(n_vars_);
    MultiPoly out(target);
    for (const auto& [e, c] : terms_) {
        MultiPoly term = constant(target, c);
        for (std::size_t i = 0; i < n_vars_; ++i) {
            if (e[i] == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(constant(target, 1));
            while (pw.size() <= e[i]) pw.push_back(pw.back() * polys[i]);
            term = term * pw[e[i]];
        }
        out = out + term;
    }
    return out;
}

MultiPoly MultiPoly::substitute_linear(const Matrix& sub) const {
    if (sub.rows() != n_vars_) throw std::invalid_argument("substitute_linear: rows");
    std::vector<MultiPoly> lin;
    lin.reserve(n_vars_);
    for (std::size_t i = 0; i < n_vars_; ++i) lin.push_back(linear(sub.row(i)));
    return compose(lin);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (o.n_vars_ != n_vars_) throw std::invalid_argument("sum: arity");
    MultiPoly s = *this;
    for (const auto& [e, c] : o.terms_) s.add_term(e, c);
    return s;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator-() const { return scaled(-1); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (o.n_vars_ != n_vars_) throw std::invalid_argument("product: arity");
    MultiPoly p(n_vars_);
    Exponent e(n_vars_);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_) {
            for (std::size_t i = 0; i < n_vars_; ++i) e[i] = a[i] + b[i];
            p.add_term(e, ca * cb);
        }
    return p;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly s(n_vars_);
    if (sgn(c) == 0) return s;
    for (const auto& [e, v] : terms_) s.terms_.emplace(e, v * c);
    return s;
}

MultiPoly MultiPoly::pow(unsigned k) const {
    MultiPoly r = constant(n_vars_, 1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

MultiPoly MultiPoly::primitive() const {
    if (terms_.empty()) return *this;
    Integer den = 1, num = 0;
    for (const auto& [e, c] : terms_) den = lcm(den, c.get_den());
    for (const auto& [e, c] : terms_) {
        const Integer v = c.get_num() * (den / c.get_den());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
    }
    Rational factor(den, num);
    factor.canonicalize();
    if (sgn(terms_.begin()->second) < 0) factor = -factor;
    return scaled(factor);
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    std::vector<std::string> vars = names;
    if (vars.empty()) {
        if (n_vars_ == 3) {
            vars = {"x", "y", "z"};
        } else {
            for (std::size_t i = 0; i < n_vars_; ++i) vars.push_back("x" + std::to_string(i));
        }
    }
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        std::vector<std::string> factors;
        for (std::size_t i = 0; i < n_vars_; ++i) {
            if (e[i] == 0) continue;
            factors.push_back(e[i] == 1 ? vars[i] : vars[i] + "^" + std::to_string(e[i]));
        }
        const bool unit = mag == 1;
        if (!unit || factors.empty()) {
            os << logbundle::to_string(mag);
            if (!factors.empty()) os << "*";
        }
        for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
    }
    return os.str();
}

std::vector<MultiPoly> fit_vanishing(std::size_t n_vars, unsigned degree, const Matrix& constraints) {
    const std::size_t count = monomials_glex(n_vars, degree).size();
    std::vector<MultiPoly> out;
    if (constraints.rows() == 0) {
        for (std::size_t k = 0; k < count; ++k) {
            Vector c(count);
            c[k] = 1;
            out.push_back(MultiPoly::from_coefficients(n_vars, degree, c));
        }
        return out;
    }
    if (constraints.cols() != count) throw std::invalid_argument("fit_vanishing: constraint length");
    const Matrix ker = mat_kernel(constraints);
    for (std::size_t r = 0; r < ker.rows(); ++r) {
        out.push_back(MultiPoly::from_coefficients(n_vars, degree, ker.row(r)));
    }
    return out;
}

MultiPoly interpolate_dense(std::size_t n_vars, unsigned degree, const std::vector<Sample>& samples) {
    if (n_vars == 0) throw std::invalid_argument("interpolate_dense: no variables");
    const auto monos = monomials_glex(n_vars, degree);
    Matrix a(samples.size(), monos.size());
    Vector rhs(samples.size());
    Vector pt(n_vars);
    pt[0] = 1;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (samples[i].point.size() + 1 != n_vars) throw std::invalid_argument("interpolate_dense: sample length");
        std::copy(samples[i].point.begin(), samples[i].point.end(), pt.begin() + 1);
        for (std::size_t k = 0; k < monos.size(); ++k) a(i, k) = monomial_at(monos[k], pt);
        rhs[i] = samples[i].value;
    }
    auto sol = mat_solve(a, rhs);
    if (!sol) throw DomainError("inconsistent", "interpolation samples are inconsistent");
    if (mat_rank(a) < monos.size()) {
        throw DomainError("underdetermined", "interpolation samples do not determine the polynomial");
    }
    return MultiPoly::from_coefficients(n_vars, degree, *sol);
}

bool BinaryForm::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return sgn(c) == 0; });
}

Rational BinaryForm::evaluate(const Rational& s, const Rational& t) const {
    const int d = degree();
    Rational acc = 0;
    for (int k = 0; k <= d; ++k) {
        Rational term = coeffs[static_cast<std::size_t>(k)];
        for (int i = 0; i < d - k; ++i) term *= s;
        for (int i = 0; i < k; ++i) term *= t;
        acc += term;
    }
    return acc;
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
    if (coeffs.empty() || o.coeffs.empty()) return {};
    std::vector<Rational> c(coeffs.size() + o.coeffs.size() - 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs.size(); ++j) c[i + j] += coeffs[i] * o.coeffs[j];
    return BinaryForm(std::move(c));
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
    if (o.coeffs.size() != coeffs.size()) throw std::invalid_argument("binary form sum: degree");
    BinaryForm s = *this;
    for (std::size_t i = 0; i < coeffs.size(); ++i) s.coeffs[i] += o.coeffs[i];
    return s;
}

BinaryForm BinaryForm::scaled(const Rational& c) const {
    BinaryForm s = *this;
    for (auto& x : s.coeffs) x *= c;
    return s;
}

BinaryForm BinaryForm::pow(unsigned k) const {
    BinaryForm r(std::vector<Rational>{1});
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

BinaryForm BinaryForm::vanishing_at(const Rational& a, const Rational& b) {
    return BinaryForm(std::vector<Rational>{b, -a});
}

Rational binary_resultant(const BinaryForm& f, const BinaryForm& g) {
    if (f.coeffs.empty() || g.coeffs.empty() || f.is_zero() || g.is_zero()) {
        throw DomainError("zero_form", "resultant of a zero binary form");
    }
    const std::size_t p = static_cast<std::size_t>(f.degree());
    const std::size_t q = static_cast<std::size_t>(g.degree());
    const std::size_t size = p + q;
    if (size == 0) return 1;
    Matrix syl(size, size);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t k = 0; k <= p; ++k) syl(i, i + k) = f.coeffs[k];
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t k = 0; k <= q; ++k) syl(q + i, i + k) = g.coeffs[k];
    return mat_det(syl);
}

std::optional<BinaryForm> binary_quotient(const BinaryForm& f, const BinaryForm& g) {
    if (g.is_zero()) throw std::invalid_argument("binary_quotient: zero divisor");
    if (f.is_zero()) {
        if (f.degree() < g.degree()) return std::nullopt;
        return BinaryForm(std::vector<Rational>(static_cast<std::size_t>(f.degree() - g.degree()) + 1));
    }
    if (f.degree() < g.degree()) return std::nullopt;
    const std::size_t dq = static_cast<std::size_t>(f.degree() - g.degree());
    std::size_t i0 = 0;
    while (sgn(g.coeffs[i0]) == 0) ++i0;
    std::vector<Rational> q(dq + 1);
    for (std::size_t j = 0; j <= dq; ++j) {
        if (j + i0 >= f.coeffs.size()) break;
        Rational v = f.coeffs[j + i0];
        for (std::size_t jp = 0; jp < j; ++jp) {
            const std::size_t i = j + i0 - jp;
            if (i < g.coeffs.size()) v -= g.coeffs[i] * q[jp];
        }
        q[j] = v / g.coeffs[i0];
    }
    BinaryForm quot(std::move(q));
    if (quot * g == f) return quot;
    return std::nullopt;
}

unsigned binary_root_multiplicity(const BinaryForm& f, const Rational& a, const Rational& b) {
    if (f.is_zero()) throw std::invalid_argument("binary_root_multiplicity: zero form");
    const BinaryForm lin = BinaryForm::vanishing_at(a, b);
    BinaryForm cur = f;
    unsigned mult = 0;
    while (cur.degree() >= 1) {
        auto q = binary_quotient(cur, lin);
        if (!q) break;
        cur = *q;
        ++mult;
    }
    return mult;
}

}  // namespace logbundle
