#include "momenta/groebner.hpp"

#include <algorithm>
#include <queue>

namespace momenta {

Ideal::Ideal(RegistryPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
    gens_.reserve(gens.size());
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!same_ring(g.ring(), ring_))
            throw std::invalid_argument("Ideal: generator ring mismatch");
        gens_.push_back(std::move(g));
    }
}

namespace detail {

struct ZTerm {
    Monomial mono;
    mpz_class coef;
};

// Integer polynomial, terms strictly descending under the engine order,
// content-free with positive leading coefficient.
using ZPoly = std::vector<ZTerm>;

struct GBData {
    struct Elem {
        ZPoly p;
        Monomial lm;
        mpz_class lc;
        uint32_t mask = 0;
    };
    std::vector<Elem> elems;
    MonomialOrder order = MonomialOrder::grevlex();

    void push(ZPoly p) {
        Elem e;
        e.lm = p.front().mono;
        e.lc = p.front().coef;
        e.mask = e.lm.support_mask();
        e.p = std::move(p);
        elems.push_back(std::move(e));
    }
};

namespace {

mpz_class content(const ZPoly& p) {
    mpz_class g = 0;
    for (const auto& t : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void strip_content(ZPoly& p) {
    if (p.empty()) return;
    mpz_class g = content(p);
    if (sgn(p.front().coef) < 0) g = -g;
    if (g == 1) return;
    for (auto& t : p) t.coef /= g;
}

// Rational polynomial -> primitive integer polynomial sorted under ord.
ZPoly to_zpoly(const Polynomial& q, const MonomialOrder& ord) {
    ZPoly r;
    if (q.is_zero()) return r;
    mpz_class den_lcm = 1;
    for (const auto& t : q.terms())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.den().get_mpz_t());
    r.reserve(q.term_count());
    for (const auto& t : q.terms())
        r.push_back({t.mono, t.coef.num() * (den_lcm / t.coef.den())});
    std::sort(r.begin(), r.end(),
              [&](const ZTerm& a, const ZTerm& b) { return ord.greater(a.mono, b.mono); });
    strip_content(r);
    return r;
}

Polynomial to_polynomial(const ZPoly& p, const RegistryPtr& ring) {
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p) terms.push_back({t.mono, Rational(t.coef)});
    return Polynomial::from_terms(ring, std::move(terms));
}

// a*r - b*(m * g), merging the sorted term lists.
ZPoly axpy(const ZPoly& r, const mpz_class& a, const mpz_class& b, const Monomial& m,
           const ZPoly& g, const MonomialOrder& ord) {
    ZPoly out;
    out.reserve(r.size() + g.size());
    size_t i = 0, j = 0;
    while (i < r.size() && j < g.size()) {
        const Monomial mg = g[j].mono * m;
        const int c = ord.compare(r[i].mono, mg);
        if (c > 0) {
            out.push_back({r[i].mono, r[i].coef * a});
            ++i;
        } else if (c < 0) {
            out.push_back({mg, g[j].coef * (-b)});
            ++j;
        } else {
            mpz_class s = r[i].coef * a - g[j].coef * b;
            if (s != 0) out.push_back({r[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < r.size(); ++i) out.push_back({r[i].mono, r[i].coef * a});
    for (; j < g.size(); ++j) out.push_back({g[j].mono * m, g[j].coef * (-b)});
    return out;
}

int find_divisor(const GBData& G, const Monomial& m, uint32_t mask) {
    for (size_t i = 0; i < G.elems.size(); ++i) {
        const auto& e = G.elems[i];
        if ((e.mask & ~mask) != 0) continue;
        if (Monomial::divides(e.lm, m)) return static_cast<int>(i);
    }
    return -1;
}

bool too_big(const ZPoly& p) {
    return !p.empty() && mpz_sizeinbase(p.front().coef.get_mpz_t(), 2) > 8192;
}

// Full normal form of r against G. Returns the content-free remainder plus
// the rational factor c with result == c * (exact remainder of r).
std::pair<ZPoly, Rational> full_reduce(ZPoly r, const GBData& G) {
    Rational mult(1);
    size_t k = 0;
    while (k < r.size()) {
        const int gi = find_divisor(G, r[k].mono, r[k].mono.support_mask());
        if (gi < 0) {
            ++k;
            continue;
        }
        const auto& g = G.elems[static_cast<size_t>(gi)];
        mpz_class d;
        mpz_gcd(d.get_mpz_t(), r[k].coef.get_mpz_t(), g.lc.get_mpz_t());
        const mpz_class a = g.lc / d; // positive: basis heads are positive
        const mpz_class b = r[k].coef / d;
        const Monomial m = Monomial::quotient(r[k].mono, g.lm);
        r = axpy(r, a, b, m, g.p, G.order);
        mult *= Rational(a);
        if (too_big(r)) {
            mpz_class c = content(r);
            if (c > 1) {
                for (auto& t : r) t.coef /= c;
                mult /= Rational(c);
            }
        }
    }
    if (!r.empty()) {
        mpz_class c = content(r);
        if (sgn(r.front().coef) < 0) c = -c;
        if (c != 1) {
            for (auto& t : r) t.coef /= c;
            mult /= Rational(c);
        }
    }
    return {std::move(r), mult};
}

class Engine {
public:
    Engine(const RegistryPtr& ring, const MonomialOrder& ord, const ResourceLimits& limits)
        : ring_(ring), limits_(limits) {
        data_.order = ord;
    }

    struct Pair {
        int i, j;
        Monomial lcm;
        int64_t wdeg;
    };

    struct PairOrder {
        const MonomialOrder* ord;
        bool operator()(const Pair& a, const Pair& b) const {
            // priority_queue keeps the greatest; invert to pop the smallest
            if (a.wdeg != b.wdeg) return a.wdeg > b.wdeg;
            if (int c = ord->compare(a.lcm, b.lcm)) return c > 0;
            if (a.j != b.j) return a.j > b.j;
            return a.i > b.i;
        }
    };

    void run(const std::vector<Polynomial>& gens) {
        std::vector<ZPoly> input;
        input.reserve(gens.size());
        for (const auto& g : gens) {
            ZPoly z = to_zpoly(g, data_.order);
            if (!z.empty()) input.push_back(std::move(z));
        }
        std::sort(input.begin(), input.end(), [&](const ZPoly& a, const ZPoly& b) {
            return data_.order.less(a.front().mono, b.front().mono);
        });
        for (auto& z : input) {
            auto [r, c] = full_reduce(std::move(z), data_);
            (void)c;
            if (!r.empty()) add_element(std::move(r));
            if (unit_) return;
        }
        while (!pairs_.empty()) {
            Pair pr = pairs_.top();
            pairs_.pop();
            check_limits(pr);
            ++processed_;
            auto [r, c] = full_reduce(spoly(pr), data_);
            (void)c;
            if (!r.empty()) add_element(std::move(r));
            if (unit_) return;
        }
    }

    bool unit() const { return unit_; }
    GBData& data() { return data_; }

private:
    void check_limits(const Pair& pr) {
        if (limits_.max_pairs && processed_ >= limits_.max_pairs)
            throw ResourceLimitError(ResourceLimitError::Kind::Pairs,
                                     "buchberger: pair limit exceeded");
        if (limits_.max_degree && pr.wdeg > static_cast<int64_t>(limits_.max_degree))
            throw ResourceLimitError(ResourceLimitError::Kind::Degree,
                                     "buchberger: degree cap exceeded");
        if (limits_.deadline && std::chrono::steady_clock::now() > *limits_.deadline)
            throw ResourceLimitError(ResourceLimitError::Kind::Timeout,
                                     "buchberger: deadline exceeded");
    }

    ZPoly spoly(const Pair& pr) const {
        const auto& f = data_.elems[static_cast<size_t>(pr.i)];
        const auto& g = data_.elems[static_cast<size_t>(pr.j)];
        mpz_class d;
        mpz_gcd(d.get_mpz_t(), f.lc.get_mpz_t(), g.lc.get_mpz_t());
        const Monomial mf = Monomial::quotient(pr.lcm, f.lm);
        const Monomial mg = Monomial::quotient(pr.lcm, g.lm);
        ZPoly shifted;
        shifted.reserve(f.p.size());
        const mpz_class a = g.lc / d;
        for (const auto& t : f.p) shifted.push_back({t.mono * mf, t.coef * a});
        return axpy(shifted, mpz_class(1), f.lc / d, mg, g.p, data_.order);
    }

    void add_element(ZPoly p) {
        if (p.front().mono.is_one()) {
            unit_ = true;
            return;
        }
        const int t = static_cast<int>(data_.elems.size());
        const Monomial lm_t = p.front().mono;

        struct Cand {
            int i;
            Monomial lcm;
            bool coprime;
            bool keep = true;
        };
        std::vector<Cand> cand;
        cand.reserve(data_.elems.size());
        for (int i = 0; i < t; ++i) {
            const Monomial& lm_i = data_.elems[static_cast<size_t>(i)].lm;
            cand.push_back({i, Monomial::lcm(lm_i, lm_t), Monomial::coprime(lm_i, lm_t)});
        }
        // Gebauer-Moller M: drop candidates whose lcm another lcm properly divides
        for (auto& a : cand) {
            for (const auto& b : cand) {
                if (a.i == b.i || !b.keep) continue;
                if (b.lcm != a.lcm && Monomial::divides(b.lcm, a.lcm)) {
                    a.keep = false;
                    break;
                }
            }
        }
        // F: one representative per lcm, preferring a coprime pair so the
        // whole class can die with it
        for (size_t x = 0; x < cand.size(); ++x) {
            if (!cand[x].keep) continue;
            size_t rep = x;
            for (size_t y = x + 1; y < cand.size(); ++y) {
                if (!cand[y].keep || cand[y].lcm != cand[x].lcm) continue;
                if (cand[y].coprime && !cand[rep].coprime) {
                    cand[rep].keep = false;
                    rep = y;
                } else {
                    cand[y].keep = false;
                }
            }
        }
        // Buchberger 1: coprime heads reduce to zero
        for (auto& a : cand)
            if (a.keep && a.coprime) a.keep = false;

        // prune old pairs strictly refined by the new head
        std::priority_queue<Pair, std::vector<Pair>, PairOrder> fresh{PairOrder{&data_.order}};
        while (!pairs_.empty()) {
            Pair pr = pairs_.top();
            pairs_.pop();
            if (Monomial::divides(lm_t, pr.lcm)) {
                const Monomial l1 = Monomial::lcm(data_.elems[static_cast<size_t>(pr.i)].lm, lm_t);
                const Monomial l2 = Monomial::lcm(data_.elems[static_cast<size_t>(pr.j)].lm, lm_t);
                if (l1 != pr.lcm && l2 != pr.lcm) continue;
            }
            fresh.push(pr);
        }
        pairs_ = std::move(fresh);
        for (const auto& a : cand) {
            if (!a.keep) continue;
            pairs_.push({a.i, t, a.lcm, a.lcm.weighted_degree(ring_->weights())});
        }
        data_.push(std::move(p));
    }

    RegistryPtr ring_;
    ResourceLimits limits_;
    GBData data_;
    std::priority_queue<Pair, std::vector<Pair>, PairOrder> pairs_{PairOrder{&data_.order}};
    uint64_t processed_ = 0;
    bool unit_ = false;
};

} // namespace
} // namespace detail

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         const ResourceLimits& limits) {
    using namespace detail;
    Engine eng(ideal.ring(), order, limits);
    eng.run(ideal.generators());

    if (eng.unit()) {
        auto data = std::make_shared<GBData>();
        data->order = order;
        data->push({{Monomial::one(), mpz_class(1)}});
        std::vector<Polynomial> basis{Polynomial::constant(ideal.ring(), Rational(1))};
        return GroebnerBasis(ideal, order, std::move(basis), std::move(data));
    }

    // Minimal head set: drop any element whose head another element's head
    // divides. New heads are never divisible by older ones, so heads are
    // pairwise distinct and this is unambiguous.
    GBData& work = eng.data();
    std::vector<int> keep;
    for (size_t i = 0; i < work.elems.size(); ++i) {
        bool minimal = true;
        for (size_t j = 0; j < work.elems.size(); ++j) {
            if (i == j) continue;
            if (Monomial::divides(work.elems[j].lm, work.elems[i].lm)) {
                minimal = false;
                break;
            }
        }
        if (minimal) keep.push_back(static_cast<int>(i));
    }
    std::sort(keep.begin(), keep.end(), [&](int a, int b) {
        return order.less(work.elems[static_cast<size_t>(a)].lm,
                          work.elems[static_cast<size_t>(b)].lm);
    });

    // Tail-reduce every survivor against the other survivors. Surviving heads
    // are pairwise indivisible, so heads stay put and the result is the
    // reduced basis.
    GBData reduced;
    reduced.order = order;
    for (size_t pass = 0; pass < keep.size(); ++pass) {
        GBData others;
        others.order = order;
        for (size_t j = 0; j < keep.size(); ++j)
            if (j != pass) others.elems.push_back(work.elems[static_cast<size_t>(keep[j])]);
        auto [nf, c] = full_reduce(work.elems[static_cast<size_t>(keep[pass])].p, others);
        (void)c;
        reduced.push(std::move(nf));
    }
    std::sort(reduced.elems.begin(), reduced.elems.end(),
              [&](const GBData::Elem& a, const GBData::Elem& b) {
                  return order.less(a.lm, b.lm);
              });

    std::vector<Polynomial> basis;
    basis.reserve(reduced.elems.size());
    for (const auto& e : reduced.elems) {
        Polynomial p = to_polynomial(e.p, ideal.ring());
        basis.push_back(p * Rational(mpz_class(1), e.lc));
    }
    auto shared = std::make_shared<GBData>(std::move(reduced));
    return GroebnerBasis(ideal, order, std::move(basis), std::move(shared));
}

bool GroebnerBasis::contains_one() const {
    return basis_.size() == 1 && basis_[0].is_constant() && !basis_[0].is_zero();
}

GroebnerBasis assemble_reduced_basis(Ideal ideal, const MonomialOrder& order,
                                     std::vector<Polynomial> basis) {
    using namespace detail;
    auto data = std::make_shared<GBData>();
    data->order = order;
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(a.leading_term(order).mono, b.leading_term(order).mono);
    });
    for (const auto& p : basis) data->push(to_zpoly(p, order));
    return GroebnerBasis(std::move(ideal), order, std::move(basis), std::move(data));
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    using namespace detail;
    if (!same_ring(p.ring(), gb.ideal().ring()))
        throw std::invalid_argument("normal_form: ring mismatch");
    if (p.is_zero()) return p;
    ZPoly z = to_zpoly(p, gb.order());
    // to_zpoly rescales; recover the factor from one matching monomial
    const Rational entry = Rational(z.front().coef) / p.coefficient(z.front().mono);
    auto [r, c] = full_reduce(std::move(z), *gb.data_);
    if (r.empty()) return Polynomial::zero(p.ring());
    return to_polynomial(r, p.ring()) * (entry * c).inverse();
}

bool ideal_membership(const Polynomial& p, const Ideal& ideal, const ResourceLimits& limits) {
    if (!same_ring(p.ring(), ideal.ring()))
        throw std::invalid_argument("ideal_membership: ring mismatch");
    GroebnerBasis gb = buchberger(ideal, MonomialOrder::grevlex(), limits);
    return normal_form(p, gb).is_zero();
}

} // namespace momenta
