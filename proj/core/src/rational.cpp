#include "momenta/rational.hpp"

namespace momenta {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpz_class num, mpz_class den) {
    if (sgn(den) == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(std::move(num), std::move(den));
    v_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        return Rational(mpz_class(std::string(s)), mpz_class(1));
    }
    mpz_class num{std::string(s.substr(0, slash))};
    mpz_class den{std::string(s.substr(slash + 1))};
    return Rational(std::move(num), std::move(den));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(unsigned e) const {
    Rational r(1);
    Rational base = *this;
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

} // namespace momenta
