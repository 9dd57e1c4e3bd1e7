#include "logbundle/rational.hpp"

#include <cctype>

#include "logbundle/errors.hpp"

namespace logbundle {

std::string to_string(const Rational& q) { return q.get_str(10); }

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                                 : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
        throw InputError("malformed rational: '" + std::string(text) + "'");
    }
    auto strip_plus = [](std::string_view s) {
        return std::string(s[0] == '+' ? s.substr(1) : s);
    };
    Integer n(strip_plus(num), 10);
    Integer d(strip_plus(den), 10);
    if (d == 0) throw InputError("zero denominator in rational: '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

Integer binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer binomial_poly(long a, long k) {
    if (k < 0) return 0;
    if (a >= 0) return binomial(a, k);
    // C(a, k) = (-1)^k C(k - a - 1, k) for negative a.
    Integer r = binomial(k - a - 1, k);
    return (k % 2 == 0) ? r : Integer(-r);
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace logbundle
