#include "momenta/ideal_ops.hpp"

#include "momenta/poly_linalg.hpp"
#include "momenta/poly_matrix.hpp"

#include <algorithm>
#include <unordered_set>
#include <functional>

namespace momenta {

// ---- ring plumbing ---------------------------------------------------------

RegistryPtr extend_registry(const RegistryPtr& ring, const std::vector<std::string>& names,
                            const std::vector<int>& weights) {
    std::vector<std::string> all;
    std::vector<int> w;
    for (int i = 0; i < ring->size(); ++i) {
        all.push_back(ring->name(i));
        w.push_back(ring->weight(i));
    }
    for (size_t k = 0; k < names.size(); ++k) {
        all.push_back(names[k]);
        w.push_back(weights.empty() ? 1 : weights[k]);
    }
    return VariableRegistry::make(std::move(all), std::move(w));
}

Polynomial rename_into(const Polynomial& p, const RegistryPtr& target) {
    if (same_ring(p.ring(), target)) return Polynomial::from_terms(target, p.terms());
    std::vector<int> map(static_cast<size_t>(p.ring()->size()), -1);
    std::vector<Term> terms;
    terms.reserve(p.term_count());
    for (const auto& t : p.terms()) {
        Monomial m;
        for (int i = 0; i < p.ring()->size(); ++i) {
            const uint16_t e = t.mono.exp(i);
            if (!e) continue;
            if (map[static_cast<size_t>(i)] < 0) {
                auto idx = target->find(p.ring()->name(i));
                if (!idx)
                    throw std::invalid_argument("rename_into: variable " + p.ring()->name(i) +
                                                " missing from target ring");
                map[static_cast<size_t>(i)] = *idx;
            }
            m.set_exp(map[static_cast<size_t>(i)], e);
        }
        terms.push_back({m, t.coef});
    }
    return Polynomial::from_terms(target, std::move(terms));
}

namespace {

std::string fresh_aux_name(const RegistryPtr& ring) {
    std::string base = "w_aux";
    if (!ring->find(base)) return base;
    for (int k = 0;; ++k) {
        std::string name = base + std::to_string(k);
        if (!ring->find(name)) return name;
    }
}

} // namespace

// ---- ideal-level queries ----------------------------------------------------

bool ideal_equality(const GroebnerBasis& gbI, const GroebnerBasis& gbJ) {
    for (const auto& g : gbI.ideal().generators())
        if (!normal_form(g, gbJ).is_zero()) return false;
    for (const auto& g : gbJ.ideal().generators())
        if (!normal_form(g, gbI).is_zero()) return false;
    return true;
}

bool ideal_equality(const Ideal& I, const Ideal& J, const ResourceLimits& limits) {
    if (!same_ring(I.ring(), J.ring()))
        throw std::invalid_argument("ideal_equality: ring mismatch");
    return ideal_equality(buchberger(I, MonomialOrder::grevlex(), limits),
                          buchberger(J, MonomialOrder::grevlex(), limits));
}

bool radical_membership(const Polynomial& p, const Ideal& I, const ResourceLimits& limits) {
    if (!same_ring(p.ring(), I.ring()))
        throw std::invalid_argument("radical_membership: ring mismatch");
    if (p.is_zero()) return true;
    const std::string aux = fresh_aux_name(I.ring());
    RegistryPtr big = extend_registry(I.ring(), {aux});
    const int w = *big->find(aux);
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(rename_into(g, big));
    gens.push_back(Polynomial::constant(big, Rational(1)) -
                   Polynomial::variable(big, w) * rename_into(p, big));
    GroebnerBasis gb = buchberger(Ideal(big, std::move(gens)), MonomialOrder::block({w}), limits);
    return gb.contains_one();
}

Ideal elimination_ideal(const Ideal& I, const std::vector<int>& keep,
                        const ResourceLimits& limits) {
    std::vector<bool> keep_mask(static_cast<size_t>(I.ring()->size()), false);
    for (int v : keep) {
        if (v < 0 || v >= I.ring()->size())
            throw std::invalid_argument("elimination_ideal: variable out of range");
        keep_mask[static_cast<size_t>(v)] = true;
    }
    std::vector<int> front;
    for (int v = 0; v < I.ring()->size(); ++v)
        if (!keep_mask[static_cast<size_t>(v)]) front.push_back(v);
    GroebnerBasis gb = buchberger(I, MonomialOrder::block(front), limits);
    std::vector<Polynomial> gens;
    for (const auto& b : gb.basis()) {
        bool pure = true;
        for (const auto& t : b.terms())
            for (int v : front)
                if (t.mono.exp(v)) pure = false;
        if (pure) gens.push_back(b);
    }
    return Ideal(I.ring(), std::move(gens));
}

Ideal saturation(const Ideal& I, const Polynomial& f, const ResourceLimits& limits) {
    if (!same_ring(f.ring(), I.ring()))
        throw std::invalid_argument("saturation: ring mismatch");
    if (f.is_zero()) throw std::invalid_argument("saturation: f must be nonzero");
    const std::string aux = fresh_aux_name(I.ring());
    RegistryPtr big = extend_registry(I.ring(), {aux});
    const int w = *big->find(aux);
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(rename_into(g, big));
    gens.push_back(Polynomial::constant(big, Rational(1)) -
                   Polynomial::variable(big, w) * rename_into(f, big));
    GroebnerBasis gb = buchberger(Ideal(big, std::move(gens)), MonomialOrder::block({w}), limits);
    std::vector<Polynomial> out;
    for (const auto& b : gb.basis()) {
        bool pure = true;
        for (const auto& t : b.terms())
            if (t.mono.exp(w)) pure = false;
        if (pure) out.push_back(rename_into(b, I.ring()));
    }
    return Ideal(I.ring(), std::move(out));
}

// ---- dimension ---------------------------------------------------------------

namespace {

std::vector<uint32_t> minimal_lt_supports(const GroebnerBasis& gb) {
    std::vector<uint32_t> sup;
    for (const auto& b : gb.basis()) {
        const uint32_t s = b.leading_term(gb.order()).mono.support_mask();
        bool dominated = false;
        for (uint32_t t : sup)
            if ((t & ~s) == 0) dominated = true; // existing subset of s
        if (dominated) continue;
        sup.erase(std::remove_if(sup.begin(), sup.end(),
                                 [&](uint32_t t) { return (s & ~t) == 0; }),
                  sup.end());
        sup.push_back(s);
    }
    return sup;
}

// enumerate independent sets; collect all of maximum size when out != nullptr
int independent_set_search(const std::vector<uint32_t>& sup, int n,
                           std::vector<uint32_t>* out) {
    int best = 0;
    std::function<void(int, uint32_t, int)> run = [&](int v, uint32_t mask, int count) {
        if (!out && count + (n - v) <= best) return;
        if (out && count + (n - v) < best) return;
        if (v == n) {
            if (count > best) {
                best = count;
                if (out) out->clear();
            }
            if (out && count == best) out->push_back(mask);
            return;
        }
        const uint32_t with = mask | (1u << v);
        bool ok = true;
        for (uint32_t s : sup)
            if ((s & ~with) == 0) {
                ok = false;
                break;
            }
        if (ok) run(v + 1, with, count + 1);
        run(v + 1, mask, count);
    };
    run(0, 0, 0);
    return best;
}

} // namespace

std::optional<int> krull_dimension(const GroebnerBasis& gb) {
    if (gb.contains_one()) return std::nullopt;
    return independent_set_search(minimal_lt_supports(gb), gb.ideal().ring()->size(), nullptr);
}

std::vector<uint32_t> maximal_independent_sets(const GroebnerBasis& gb) {
    if (gb.contains_one()) return {};
    std::vector<uint32_t> out;
    independent_set_search(minimal_lt_supports(gb), gb.ideal().ring()->size(), &out);
    return out;
}

std::optional<int> krull_dimension(const Ideal& I, const ResourceLimits& limits) {
    return krull_dimension(buchberger(I, MonomialOrder::grevlex(), limits));
}

// ---- ring map kernels ----------------------------------------------------------

RingMapKernel ring_map_kernel_full(const RingMapKernelQuery& q, const ResourceLimits& limits) {
    if (q.source_names.size() != q.images.size())
        throw std::invalid_argument("ring_map_kernel: one image per source variable");
    for (const auto& img : q.images)
        if (!same_ring(img.ring(), q.target_ring))
            throw std::invalid_argument("ring_map_kernel: image ring mismatch");
    for (const auto& g : q.modulus)
        if (!same_ring(g.ring(), q.target_ring))
            throw std::invalid_argument("ring_map_kernel: modulus ring mismatch");

    std::vector<int> weights = q.source_weights;
    if (weights.empty()) weights.assign(q.source_names.size(), 1);
    RegistryPtr source = VariableRegistry::make(q.source_names, weights);
    RegistryPtr joined = extend_registry(q.target_ring, q.source_names, weights);

    std::vector<int> tag_of;
    for (const auto& name : q.source_names) tag_of.push_back(*joined->find(name));
    std::vector<int> front;
    for (int v = 0; v < q.target_ring->size(); ++v) front.push_back(v);

    std::vector<Polynomial> gens;
    for (const auto& g : q.modulus) gens.push_back(rename_into(g, joined));
    for (size_t i = 0; i < q.images.size(); ++i)
        gens.push_back(Polynomial::variable(joined, tag_of[i]) - rename_into(q.images[i], joined));

    GroebnerBasis joined_gb =
        buchberger(Ideal(joined, std::move(gens)), MonomialOrder::block(front), limits);

    std::vector<Polynomial> kernel_gens;
    for (const auto& b : joined_gb.basis()) {
        bool pure = true;
        for (const auto& t : b.terms())
            for (int v : front)
                if (t.mono.exp(v)) pure = false;
        if (pure) kernel_gens.push_back(rename_into(b, source));
    }
    Ideal kernel(source, kernel_gens);
    // The pure-tag part of the block-order reduced basis is the reduced basis
    // of the kernel under grevlex on the source ring.
    GroebnerBasis kernel_gb =
        assemble_reduced_basis(kernel, MonomialOrder::grevlex(), kernel_gens);
    return RingMapKernel(std::move(kernel), std::move(kernel_gb), std::move(source), joined,
                         std::move(joined_gb), std::move(tag_of));
}

Ideal ring_map_kernel(const RingMapKernelQuery& q, const ResourceLimits& limits) {
    return ring_map_kernel_full(q, limits).kernel();
}

std::optional<Polynomial> RingMapKernel::subalgebra_representation(const Polynomial& f) const {
    Polynomial nf = normal_form(rename_into(f, joined_ring_), joined_gb_);
    // representation exists iff the normal form uses only tag variables
    for (const auto& t : nf.terms())
        for (int v = 0; v < joined_ring_->size() - source_ring_->size(); ++v)
            if (t.mono.exp(v)) return std::nullopt;
    return rename_into(nf, source_ring_);
}

// ---- Hilbert series -------------------------------------------------------------

namespace {

UniPoly one_minus_t_pow(int64_t d) {
    UniPoly p = UniPoly::constant(Rational(1));
    return p - UniPoly::monomial(Rational(1), static_cast<size_t>(d));
}

void minimalize(std::vector<Monomial>& gens) {
    std::vector<Monomial> out;
    for (const auto& g : gens) {
        bool dominated = false;
        for (const auto& h : out)
            if (Monomial::divides(h, g)) {
                dominated = true;
                break;
            }
        if (!dominated) {
            out.erase(std::remove_if(out.begin(), out.end(),
                                     [&](const Monomial& h) { return Monomial::divides(g, h); }),
                      out.end());
            out.push_back(g);
        }
    }
    gens = std::move(out);
}

UniPoly hilbert_numerator(std::vector<Monomial> gens, const std::vector<int>& weights) {
    minimalize(gens);
    if (gens.empty()) return UniPoly::constant(Rational(1));
    for (const auto& g : gens)
        if (g.is_one()) return UniPoly::zero();

    bool pairwise_coprime = true;
    for (size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
        for (size_t j = i + 1; j < gens.size(); ++j)
            if (!Monomial::coprime(gens[i], gens[j])) {
                pairwise_coprime = false;
                break;
            }
    if (pairwise_coprime) {
        UniPoly p = UniPoly::constant(Rational(1));
        for (const auto& g : gens) p = p * one_minus_t_pow(g.weighted_degree(weights));
        return p;
    }

    // pivot on the most shared variable
    std::array<int, kMaxVars> freq{};
    for (const auto& g : gens)
        for (int v = 0; v < kMaxVars; ++v)
            if (g.exp(v)) ++freq[static_cast<size_t>(v)];
    int pivot = 0;
    for (int v = 1; v < kMaxVars; ++v)
        if (freq[static_cast<size_t>(v)] > freq[static_cast<size_t>(pivot)]) pivot = v;

    // I + (x_pivot): x_pivot is coprime to the generators it does not divide
    std::vector<Monomial> rest;
    for (const auto& g : gens)
        if (!g.exp(pivot)) rest.push_back(g);
    UniPoly sum_part =
        one_minus_t_pow(weights[static_cast<size_t>(pivot)]) * hilbert_numerator(rest, weights);

    // I : x_pivot
    std::vector<Monomial> colon;
    colon.reserve(gens.size());
    for (const auto& g : gens) {
        Monomial m = g;
        if (m.exp(pivot)) m.set_exp(pivot, static_cast<uint16_t>(m.exp(pivot) - 1));
        colon.push_back(m);
    }
    UniPoly colon_part = hilbert_numerator(colon, weights);
    return sum_part + UniPoly::monomial(Rational(1), static_cast<size_t>(
                                                         weights[static_cast<size_t>(pivot)])) *
                          colon_part;
}

} // namespace

UniPoly HilbertSeries::denominator() const {
    UniPoly d = UniPoly::constant(Rational(1));
    for (int w : weights) d = d * one_minus_t_pow(w);
    return d;
}

UniRationalFunction HilbertSeries::as_rational_function() const {
    return UniRationalFunction(numerator, denominator());
}

std::vector<Rational> HilbertSeries::dimensions(int maxdeg) const {
    return series_expand(UniRationalFunction(numerator, denominator()), maxdeg);
}

HilbertSeries weighted_hilbert_series(const GroebnerBasis& gb) {
    const auto& ring = gb.ideal().ring();
    for (const auto& g : gb.ideal().generators())
        if (!g.is_weighted_homogeneous())
            throw std::invalid_argument("weighted_hilbert_series: generators not homogeneous");
    std::vector<Monomial> lts;
    for (const auto& b : gb.basis()) lts.push_back(b.leading_term(gb.order()).mono);
    HilbertSeries hs;
    hs.weights = ring->weights();
    hs.numerator = gb.contains_one() ? UniPoly::zero() : hilbert_numerator(lts, hs.weights);
    if (gb.basis().empty()) hs.numerator = UniPoly::constant(Rational(1));
    return hs;
}

HilbertSeries weighted_hilbert_series(const Ideal& I, const ResourceLimits& limits) {
    for (const auto& g : I.generators())
        if (!g.is_weighted_homogeneous())
            throw std::invalid_argument("weighted_hilbert_series: generators not homogeneous");
    return weighted_hilbert_series(buchberger(I, MonomialOrder::grevlex(), limits));
}

// ---- graded dimensions by linear algebra ------------------------------------------

namespace {

// enumerate exponent vectors with given weighted degree
void weighted_monomials_rec(const std::vector<int>& weights, size_t i, int64_t left,
                            std::vector<uint16_t>& exps,
                            const std::function<void(const std::vector<uint16_t>&)>& emit) {
    if (i + 1 == weights.size()) {
        if (left % weights[i] == 0) {
            exps[i] = static_cast<uint16_t>(left / weights[i]);
            emit(exps);
        }
        return;
    }
    const int64_t maxe = left / weights[i];
    for (int64_t e = 0; e <= maxe; ++e) {
        exps[i] = static_cast<uint16_t>(e);
        weighted_monomials_rec(weights, i + 1, left - e * weights[i], exps, emit);
    }
    exps[i] = 0;
}

} // namespace

std::vector<int64_t> graded_algebra_dimensions(const std::vector<Polynomial>& images,
                                               const std::vector<int>& weights,
                                               const GroebnerBasis& modulus_gb, int maxdeg) {
    if (images.size() != weights.size())
        throw std::invalid_argument("graded_algebra_dimensions: weight count mismatch");
    std::vector<Polynomial> nf_images;
    nf_images.reserve(images.size());
    for (const auto& img : images) nf_images.push_back(normal_form(img, modulus_gb));

    std::vector<int64_t> dims;
    for (int d = 0; d <= maxdeg; ++d) {
        PolyRowSpace space;
        std::vector<uint16_t> exps(weights.size(), 0);
        weighted_monomials_rec(weights, 0, d, exps, [&](const std::vector<uint16_t>& e) {
            Polynomial prod = Polynomial::constant(modulus_gb.ideal().ring(), Rational(1));
            for (size_t i = 0; i < e.size(); ++i) {
                for (uint16_t k = 0; k < e[i]; ++k)
                    prod = normal_form(prod * nf_images[i], modulus_gb);
            }
            space.insert(std::move(prod));
        });
        dims.push_back(static_cast<int64_t>(space.rank()));
    }
    return dims;
}

std::map<int64_t, int> minimal_generators_by_degree(const std::vector<Polynomial>& gens) {
    if (gens.empty()) return {};
    const RegistryPtr ring = gens.front().ring();
    int64_t maxdeg = 0;
    for (const auto& g : gens) {
        if (!g.is_weighted_homogeneous())
            throw std::invalid_argument("minimal_generators_by_degree: not homogeneous");
        maxdeg = std::max(maxdeg, g.weighted_degree());
    }
    // graded pieces of the ideal up to maxdeg
    std::map<int64_t, PolyRowSpace> piece;
    for (int64_t d = 0; d <= maxdeg; ++d) {
        PolyRowSpace space;
        for (const auto& g : gens) {
            const int64_t gd = g.weighted_degree();
            if (gd > d) continue;
            std::vector<uint16_t> exps(static_cast<size_t>(ring->size()), 0);
            weighted_monomials_rec(ring->weights(), 0, d - gd, exps,
                                   [&](const std::vector<uint16_t>& e) {
                                       Monomial m;
                                       for (size_t i = 0; i < e.size(); ++i)
                                           if (e[i]) m.set_exp(static_cast<int>(i), e[i]);
                                       space.insert(Polynomial::term(ring, m, Rational(1)) * g);
                                   });
        }
        piece.emplace(d, std::move(space));
    }
    std::map<int64_t, int> out;
    for (int64_t d = 0; d <= maxdeg; ++d) {
        PolyRowSpace from_below;
        for (int v = 0; v < ring->size(); ++v) {
            const int64_t lower = d - ring->weight(v);
            if (lower < 0) continue;
            auto it = piece.find(lower);
            if (it == piece.end()) continue;
            for (const auto& row : it->second.rows())
                from_below.insert(Polynomial::variable(ring, v) * row);
        }
        const int fresh = static_cast<int>(piece.at(d).rank() - from_below.rank());
        if (fresh > 0) out[d] = fresh;
    }
    return out;
}

// ---- singular locus -----------------------------------------------------------------

Ideal singular_locus_ideal(const Ideal& I, int codim) {
    const auto& ring = I.ring();
    const int g = static_cast<int>(I.generators().size());
    const int n = ring->size();
    if (codim < 1 || codim > std::min(g, n))
        throw std::invalid_argument("singular_locus_ideal: bad codimension");
    PolyMatrix jac(ring, g, n);
    for (int r = 0; r < g; ++r)
        for (int c = 0; c < n; ++c) jac.at(r, c) = I.generators()[static_cast<size_t>(r)].derivative(c);

    std::vector<Polynomial> gens = I.generators();
    std::unordered_set<std::string> seen;
    for (const auto& p : gens) seen.insert(p.str());
    const Ideal minors = minor_ideal(jac, codim);
    for (const auto& m : minors.generators()) {
        Polynomial prim = m.primitive_part();
        if (seen.insert(prim.str()).second) gens.push_back(std::move(prim));
    }
    return Ideal(ring, std::move(gens));
}

} // namespace momenta
