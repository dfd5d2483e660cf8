#ifndef MOMENTA_TESTS_SUPPORT_HPP
#define MOMENTA_TESTS_SUPPORT_HPP

#include "momenta/groebner.hpp"
#include "momenta/random.hpp"

#include <numeric>
#include <set>

namespace momenta::test {

inline RegistryPtr ring(std::initializer_list<std::string> names) {
    return VariableRegistry::make(std::vector<std::string>(names));
}

inline Polynomial P(const RegistryPtr& r, std::string_view text) {
    return Polynomial::parse(r, text);
}

inline Polynomial random_poly(Rng& rng, const RegistryPtr& r, int max_terms, int max_deg,
                              int coef_bound = 6) {
    std::vector<Term> terms;
    const int nterms = static_cast<int>(rng.int_in(0, max_terms));
    for (int t = 0; t < nterms; ++t) {
        Monomial m;
        int budget = static_cast<int>(rng.int_in(0, max_deg));
        while (budget > 0) {
            const int v = static_cast<int>(rng.int_in(0, r->size() - 1));
            m.set_exp(v, static_cast<uint16_t>(m.exp(v) + 1));
            --budget;
        }
        terms.push_back({m, rng.rational(coef_bound)});
    }
    return Polynomial::from_terms(r, std::move(terms));
}

// Division with a randomized choice of reducer at every step; for a reduced
// basis the remainder must agree with normal_form regardless of the path.
inline Polynomial randomized_normal_form(Rng& rng, Polynomial p, const GroebnerBasis& gb) {
    const auto& order = gb.order();
    Polynomial out = Polynomial::zero(p.ring());
    while (!p.is_zero()) {
        const Term lt = p.leading_term(order);
        std::vector<const Polynomial*> divisors;
        for (const auto& g : gb.basis())
            if (Monomial::divides(g.leading_term(order).mono, lt.mono)) divisors.push_back(&g);
        if (divisors.empty()) {
            out = out + Polynomial::term(p.ring(), lt.mono, lt.coef);
            p = p - Polynomial::term(p.ring(), lt.mono, lt.coef);
            continue;
        }
        const auto& g = *divisors[static_cast<size_t>(rng.int_in(0, static_cast<int64_t>(divisors.size()) - 1))];
        const Term glt = g.leading_term(order);
        const Monomial shift = Monomial::quotient(lt.mono, glt.mono);
        p = p - g * Polynomial::term(p.ring(), shift, lt.coef / glt.coef);
    }
    return out;
}

// Long-division oracle for power series of rational functions.
inline std::vector<Rational> series_oracle(const std::vector<Rational>& num,
                                           const std::vector<Rational>& den, int order) {
    std::vector<Rational> out;
    std::vector<Rational> rem = num;
    rem.resize(std::max<size_t>(num.size(), static_cast<size_t>(order) + 1), Rational(0));
    for (int k = 0; k <= order; ++k) {
        const Rational c = rem[static_cast<size_t>(k)] / den[0];
        out.push_back(c);
        for (size_t j = 0; j < den.size() && k + j <= static_cast<size_t>(order); ++j)
            rem[static_cast<size_t>(k) + j] -= c * den[j];
    }
    return out;
}

// Brute-force weighted Hilbert function: count standard monomials of each
// weighted degree (monomials not divisible by any leading term).
inline std::vector<int64_t> hilbert_oracle(const GroebnerBasis& gb, int maxdeg) {
    const auto& ring = gb.ideal().ring();
    std::vector<Monomial> lts;
    for (const auto& b : gb.basis()) lts.push_back(b.leading_term(gb.order()).mono);
    std::vector<int64_t> counts(static_cast<size_t>(maxdeg) + 1, 0);
    std::vector<uint16_t> exps(static_cast<size_t>(ring->size()), 0);
    std::function<void(int, int)> rec = [&](int var, int used) {
        if (var == ring->size()) {
            Monomial m;
            for (size_t i = 0; i < exps.size(); ++i)
                if (exps[i]) m.set_exp(static_cast<int>(i), exps[i]);
            for (const auto& l : lts)
                if (Monomial::divides(l, m)) return;
            ++counts[static_cast<size_t>(used)];
            return;
        }
        for (int e = 0; used + e * ring->weight(var) <= maxdeg; ++e) {
            exps[static_cast<size_t>(var)] = static_cast<uint16_t>(e);
            rec(var + 1, used + e * ring->weight(var));
        }
        exps[static_cast<size_t>(var)] = 0;
    };
    rec(0, 0);
    return counts;
}

} // namespace momenta::test

#endif
