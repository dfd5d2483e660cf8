#include "momenta/unirational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace momenta {

UniPoly::UniPoly(std::vector<Rational> coefs) : c_(std::move(coefs)) { trim(); }

UniPoly UniPoly::constant(Rational c) {
    UniPoly p;
    if (!c.is_zero()) p.c_.push_back(std::move(c));
    return p;
}

UniPoly UniPoly::monomial(Rational c, size_t power) {
    UniPoly p;
    if (!c.is_zero()) {
        p.c_.assign(power + 1, Rational(0));
        p.c_[power] = std::move(c);
    }
    return p;
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UniPoly::eval(const Rational& x) const {
    Rational r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly UniPoly::operator-() const {
    std::vector<Rational> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(-x);
    return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const Rational& s) const {
    if (s.is_zero()) return UniPoly();
    std::vector<Rational> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(x * s);
    return UniPoly(std::move(c));
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly r = UniPoly::constant(Rational(1));
    UniPoly base = *this;
    while (e) {
        if (e & 1u) r = r * base;
        if (e >>= 1u) base = base * base;
    }
    return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("UniPoly: division by zero");
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quo;
    const int db = b.degree();
    const Rational lead = b.c_.back();
    while (static_cast<int>(rem.size()) - 1 >= db) {
        if (rem.back().is_zero()) {
            rem.pop_back();
            continue;
        }
        const size_t shift = rem.size() - 1 - static_cast<size_t>(db);
        const Rational q = rem.back() / lead;
        if (quo.size() < shift + 1) quo.resize(shift + 1, Rational(0));
        quo[shift] = q;
        for (int i = 0; i <= db; ++i)
            rem[shift + static_cast<size_t>(i)] -= q * b.c_[static_cast<size_t>(i)];
        rem.pop_back();
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = a * a.c_.back().inverse(); // monic
    return a;
}

std::string UniPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        Rational c = c_[i];
        if (first) {
            if (c.sign() < 0) {
                os << "-";
                c = -c;
            }
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        if (i == 0 || !c.is_one()) os << c.str();
        if (i > 0) {
            if (!c.is_one()) os << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

UniPoly UniPoly::parse(std::string_view s) {
    std::vector<Rational> coefs;
    size_t pos = 0;
    auto skip = [&] {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    };
    auto number = [&]() -> std::string {
        size_t start = pos;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
            ++pos;
        return std::string(s.substr(start, pos - start));
    };
    int sign = 1;
    bool pending = false;
    while (true) {
        skip();
        if (pos >= s.size()) break;
        char c = s[pos];
        if (c == '+' || c == '-') {
            ++pos;
            sign = (c == '-') ? -sign : sign;
            pending = true;
            continue;
        }
        Rational coef(sign);
        sign = 1;
        pending = false;
        bool saw = false;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coef *= Rational::parse(number());
            saw = true;
            skip();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                skip();
            }
        }
        size_t power = 0;
        if (pos < s.size() && s[pos] == 't') {
            ++pos;
            power = 1;
            skip();
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                skip();
                power = std::stoul(number());
            }
            saw = true;
        }
        if (!saw) throw std::invalid_argument("UniPoly::parse: bad token");
        if (coefs.size() < power + 1) coefs.resize(power + 1, Rational(0));
        coefs[power] += coef;
    }
    if (pending) throw std::invalid_argument("UniPoly::parse: dangling sign");
    return UniPoly(std::move(coefs));
}

UniRationalFunction::UniRationalFunction(UniPoly num, UniPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("UniRationalFunction: zero denominator");
    UniPoly g = UniPoly::gcd(num_, den_);
    if (!g.is_zero() && g.degree() > 0) {
        num_ = UniPoly::divmod(num_, g).first;
        den_ = UniPoly::divmod(den_, g).first;
    }
}

UniRationalFunction operator*(const UniRationalFunction& a, const UniRationalFunction& b) {
    return UniRationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

bool operator==(const UniRationalFunction& a, const UniRationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

std::vector<Rational> series_expand(const UniRationalFunction& f, int order) {
    const UniPoly& den = f.denominator();
    if (den.coef(0).is_zero())
        throw std::domain_error("series_expand: pole at t = 0");
    const Rational d0inv = den.coef(0).inverse();
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) {
        Rational acc = f.numerator().coef(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i)
            acc -= out[static_cast<size_t>(i)] * den.coef(static_cast<size_t>(k - i));
        out.push_back(acc * d0inv);
    }
    return out;
}

bool ratfun_identity_check(const UniRationalFunction& f, const UniPoly& multiplier,
                           const UniPoly& expected) {
    return f.numerator() * multiplier == expected * f.denominator();
}

} // namespace momenta
