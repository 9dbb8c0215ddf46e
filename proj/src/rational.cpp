#include "probstirling/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace probstirling {

namespace {

[[noreturn]] void throw_zero_denominator() {
    throw std::domain_error("rational: zero denominator");
}

} // namespace

Rational::Rational(long num, long den) : q_(static_cast<signed long>(num)) {
    if (den == 0) throw_zero_denominator();
    q_ /= mpq_class(static_cast<signed long>(den));
}

Rational::Rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw_zero_denominator();
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw_zero_denominator();
    q_ /= o.q_;
    return *this;
}

Rational operator/(const Rational& a, const Rational& b) {
    Rational r = a;
    r /= b;
    return r;
}

Rational Rational::parse(std::string_view text) {
    const auto bad = [&] {
        return std::invalid_argument("rational: cannot parse '" + std::string(text) + "'");
    };
    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (den.empty()) throw bad();
    }
    const auto valid_int = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    if (!valid_int(num, true) || (!den.empty() && !valid_int(den, false))) throw bad();
    Integer n(std::string(num), 10);
    Integer d = den.empty() ? Integer(1) : Integer(std::string(den), 10);
    return Rational(n, d);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw std::domain_error("rational: negative power of zero");
        return Rational(0);
    }
    const unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), mag);
    mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), mag);
    return e > 0 ? Rational(n, d) : Rational(d, n);
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

Rational abs(const Rational& x) {
    return x.sign() < 0 ? -x : x;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
    return os << x.str();
}

} // namespace probstirling
