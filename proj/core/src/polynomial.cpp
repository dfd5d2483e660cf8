#include "momenta/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace momenta {

namespace {

const MonomialOrder& canonical_order() {
    static const MonomialOrder ord = MonomialOrder::grevlex();
    return ord;
}

void require_same_ring(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring(), b.ring()))
        throw std::invalid_argument("polynomial ring mismatch");
}

} // namespace

Polynomial Polynomial::constant(RegistryPtr ring, Rational c) {
    Polynomial p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({Monomial::one(), std::move(c)});
    return p;
}

Polynomial Polynomial::variable(RegistryPtr ring, int var) {
    if (var < 0 || var >= ring->size())
        throw std::out_of_range("Polynomial::variable: index out of range");
    Polynomial p(std::move(ring));
    p.terms_.push_back({Monomial::var(var), Rational(1)});
    return p;
}

Polynomial Polynomial::variable(RegistryPtr ring, std::string_view name) {
    auto idx = ring->find(name);
    if (!idx) throw std::invalid_argument("Polynomial::variable: unknown name " + std::string(name));
    return variable(std::move(ring), *idx);
}

Polynomial Polynomial::term(RegistryPtr ring, Monomial m, Rational c) {
    Polynomial p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({m, std::move(c)});
    return p;
}

Polynomial Polynomial::from_terms(RegistryPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void Polynomial::normalize() {
    const auto& ord = canonical_order();
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coef += t.coef;
            if (out.back().coef.is_zero()) out.pop_back();
        } else if (!t.coef.is_zero()) {
            out.push_back(std::move(t));
        }
    }
    terms_ = std::move(out);
}

int Polynomial::degree() const {
    if (terms_.empty()) return kDegreeMinusInfinity;
    uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return static_cast<int>(d);
}

int64_t Polynomial::weighted_degree() const {
    if (terms_.empty()) return kDegreeMinusInfinity;
    int64_t d = std::numeric_limits<int64_t>::min();
    for (const auto& t : terms_) d = std::max(d, t.mono.weighted_degree(ring_->weights()));
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const uint32_t d = terms_[0].mono.degree();
    for (const auto& t : terms_)
        if (t.mono.degree() != d) return false;
    return true;
}

bool Polynomial::is_weighted_homogeneous() const {
    if (terms_.empty()) return true;
    const int64_t d = terms_[0].mono.weighted_degree(ring_->weights());
    for (const auto& t : terms_)
        if (t.mono.weighted_degree(ring_->weights()) != d) return false;
    return true;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coef;
    return Rational(0);
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw std::domain_error("leading_term of zero polynomial");
    size_t best = 0;
    for (size_t i = 1; i < terms_.size(); ++i)
        if (order.greater(terms_[i].mono, terms_[best].mono)) best = i;
    return terms_[best];
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coef});
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a, b);
    const auto& ord = canonical_order();
    Polynomial r(a.ring_ ? a.ring_ : b.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        const int c = ord.compare(a.terms_[i].mono, b.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(b.terms_[j++]);
        } else {
            Rational s = a.terms_[i].coef + b.terms_[j].coef;
            if (!s.is_zero()) r.terms_.push_back({a.terms_[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a, b);
    Polynomial r(a.ring_ ? a.ring_ : b.ring_);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            Monomial m = ta.mono * tb.mono;
            auto [it, fresh] = acc.emplace(m, ta.coef * tb.coef);
            if (!fresh) it->second += ta.coef * tb.coef;
        }
    }
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) r.terms_.push_back({m, std::move(c)});
    r.normalize();
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coef * c});
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = Polynomial::constant(ring_, Rational(1));
    Polynomial base = *this;
    while (e) {
        if (e & 1u) r = r * base;
        if (e >>= 1u) base = base * base;
    }
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef)
            return false;
    return true;
}

Polynomial Polynomial::substitute(const std::map<int, Polynomial>& assignment) const {
    RegistryPtr target = ring_;
    for (const auto& [v, img] : assignment) {
        if (v < 0 || v >= ring_->size())
            throw std::invalid_argument("substitute: variable index out of range");
        target = img.ring();
    }
    if (!assignment.empty()) {
        for (const auto& [v, img] : assignment)
            if (!same_ring(img.ring(), target))
                throw std::invalid_argument("substitute: images live in different rings");
        if (!same_ring(target, ring_)) {
            // Unassigned variables must exist in the target ring by name.
            for (const auto& t : terms_)
                for (int i = 0; i < ring_->size(); ++i)
                    if (t.mono.exp(i) && !assignment.count(i) && !target->find(ring_->name(i)))
                        throw std::invalid_argument("substitute: unassigned variable " +
                                                    ring_->name(i) + " missing from target ring");
        }
    }

    // Power cache per assigned variable.
    std::map<int, std::vector<Polynomial>> powers;
    Polynomial result = Polynomial::zero(target);
    for (const auto& t : terms_) {
        Polynomial factor = Polynomial::constant(target, t.coef);
        Monomial rest;
        for (int i = 0; i < ring_->size(); ++i) {
            const uint16_t e = t.mono.exp(i);
            if (!e) continue;
            auto it = assignment.find(i);
            if (it == assignment.end()) {
                const int j = same_ring(target, ring_) ? i : *target->find(ring_->name(i));
                rest.set_exp(j, static_cast<uint16_t>(rest.exp(j) + e));
                continue;
            }
            auto& cache = powers[i];
            if (cache.empty()) cache.push_back(Polynomial::constant(target, Rational(1)));
            while (cache.size() <= e) cache.push_back(cache.back() * it->second);
            factor = factor * cache[e];
        }
        result = result + factor * Polynomial::term(target, rest, Rational(1));
    }
    return result;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& assignment) const {
    std::map<int, Polynomial> byindex;
    for (const auto& [name, img] : assignment) {
        auto idx = ring_->find(name);
        if (!idx) throw std::invalid_argument("substitute: unknown variable " + name);
        byindex.emplace(*idx, img);
    }
    return substitute(byindex);
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != ring_->size())
        throw std::invalid_argument("evaluate: point dimension mismatch");
    Rational sum(0);
    for (const auto& t : terms_) {
        Rational v = t.coef;
        for (int i = 0; i < ring_->size(); ++i) {
            const uint16_t e = t.mono.exp(i);
            if (e) v *= point[static_cast<size_t>(i)].pow(e);
        }
        sum += v;
    }
    return sum;
}

Polynomial Polynomial::derivative(int var) const {
    if (var < 0 || var >= ring_->size())
        throw std::out_of_range("derivative: variable index out of range");
    Polynomial r(ring_);
    for (const auto& t : terms_) {
        const uint16_t e = t.mono.exp(var);
        if (!e) continue;
        Monomial m = t.mono;
        m.set_exp(var, static_cast<uint16_t>(e - 1));
        r.terms_.push_back({m, t.coef * Rational(e)});
    }
    r.normalize();
    return r;
}

Polynomial Polynomial::primitive_part() const {
    if (terms_.empty()) return *this;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coef.num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.den().get_mpz_t());
    }
    Rational scale{den_lcm, num_gcd};
    if (terms_[0].coef.sign() < 0) scale = -scale;
    return *this * scale;
}

std::string Polynomial::str() const { return str(MonomialOrder::grevlex()); }

std::string Polynomial::str(const MonomialOrder& order) const {
    if (terms_.empty()) return "0";
    std::vector<const Term*> sorted;
    sorted.reserve(terms_.size());
    for (const auto& t : terms_) sorted.push_back(&t);
    std::stable_sort(sorted.begin(), sorted.end(), [&](const Term* a, const Term* b) {
        return order.greater(a->mono, b->mono);
    });
    std::ostringstream os;
    bool first = true;
    for (const Term* t : sorted) {
        Rational c = t->coef;
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
        bool printed = false;
        if (!c.is_one() || t->mono.is_one()) {
            os << c.str();
            printed = true;
        }
        for (int i = 0; i < ring_->size(); ++i) {
            const uint16_t e = t->mono.exp(i);
            if (!e) continue;
            if (printed) os << "*";
            os << ring_->name(i);
            if (e > 1) os << "^" << e;
            printed = true;
        }
    }
    return os.str();
}

namespace {

struct Lexer {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char get() {
        skip_ws();
        return s[pos++];
    }
    std::string number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        }
        return std::string(s.substr(start, pos - start));
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return std::string(s.substr(start, pos - start));
    }
};

} // namespace

Polynomial Polynomial::parse(const RegistryPtr& ring, std::string_view text) {
    Lexer lx{text};
    std::vector<Term> terms;
    bool expect_term = true;
    int sign = 1;
    while (!lx.eof()) {
        char c = lx.peek();
        if (c == '+' || c == '-') {
            lx.get();
            sign = (c == '-') ? -sign : sign;
            expect_term = true;
            continue;
        }
        if (!expect_term) throw std::invalid_argument("poly parse: missing operator near '" +
                                                      std::string(1, c) + "'");
        // one term: [coef] ['*' var ['^' e]]*
        Rational coef(sign);
        sign = 1;
        bool have_factor = false;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coef *= Rational::parse(lx.number());
            have_factor = true;
        }
        Monomial mono;
        while (true) {
            char p = lx.peek();
            if (p == '*') {
                lx.get();
                p = lx.peek();
            } else if (have_factor) {
                break; // factors must be '*'-separated
            }
            if (std::isalpha(static_cast<unsigned char>(p)) || p == '_') {
                std::string name = lx.ident();
                auto idx = ring->find(name);
                if (!idx) throw std::invalid_argument("poly parse: unknown variable " + name);
                uint16_t e = 1;
                if (lx.peek() == '^') {
                    lx.get();
                    e = static_cast<uint16_t>(std::stoul(lx.number()));
                }
                mono.set_exp(*idx, static_cast<uint16_t>(mono.exp(*idx) + e));
                have_factor = true;
            } else if (std::isdigit(static_cast<unsigned char>(p))) {
                coef *= Rational::parse(lx.number());
                have_factor = true;
            } else {
                break;
            }
        }
        if (!have_factor) throw std::invalid_argument("poly parse: empty term");
        terms.push_back({mono, coef});
        expect_term = false;
    }
    if (expect_term && !terms.empty())
        throw std::invalid_argument("poly parse: dangling operator");
    return Polynomial::from_terms(ring, std::move(terms));
}

Polynomial poly_arith(const Polynomial& p, const Polynomial& q, PolyOp op) {
    switch (op) {
        case PolyOp::Add: return p + q;
        case PolyOp::Sub: return p - q;
        case PolyOp::Mul: return p * q;
    }
    throw std::logic_error("poly_arith: bad op");
}

} // namespace momenta
