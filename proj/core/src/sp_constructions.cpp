#include "momenta/sp_constructions.hpp"

#include <sstream>
#include <functional>

namespace momenta {

SpInstance SpInstance::make(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("SpInstance: n, m >= 1");
    std::vector<std::string> names;
    names.reserve(size_t(4) * n * m);
    for (int i = 1; i <= 2 * n; ++i)
        for (int j = 1; j <= 2 * m; ++j) {
            std::ostringstream os;
            os << "x" << i;
            if (i > 9 || j > 9) os << "_";
            os << j;
            names.push_back(os.str());
        }
    SpInstance sp;
    sp.n = n;
    sp.m = m;
    sp.ring = VariableRegistry::make(std::move(names));
    sp.X = PolyMatrix(sp.ring, 2 * n, 2 * m);
    for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2 * m; ++j)
            sp.X.at(i, j) = Polynomial::variable(sp.ring, sp.var(i, j));
    sp.J = PolyMatrix::from_rational(sp.ring, standard_symplectic_form(n));
    sp.Q = PolyMatrix::from_rational(sp.ring, hyperbolic_form(m));
    return sp;
}

Ideal sp_moment_ideal(const SpInstance& sp) {
    const PolyMatrix M = sp.X * sp.Q * sp.X.transpose();
    std::vector<Polynomial> gens;
    for (int i = 0; i < M.rows(); ++i)
        for (int j = i; j < M.cols(); ++j)
            if (!M.at(i, j).is_zero()) gens.push_back(M.at(i, j).primitive_part());
    return Ideal(sp.ring, std::move(gens));
}

std::vector<Polynomial> sp_invariants(const SpInstance& sp, int s) {
    if (s < 1 || s > 2 * sp.m) throw std::invalid_argument("sp_invariants: s out of range");
    std::vector<Polynomial> out;
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) {
            Polynomial z = Polynomial::zero(sp.ring);
            for (int a = 0; a < 2 * sp.n; ++a)
                for (int b = 0; b < 2 * sp.n; ++b) {
                    const Rational& jab = sp.J.at(a, b).constant_term();
                    if (jab.is_zero()) continue;
                    z = z + sp.X.at(a, i) * sp.X.at(b, j) * jab;
                }
            out.push_back(std::move(z));
        }
    return out;
}

std::vector<std::string> sp_invariant_names(int s) {
    std::vector<std::string> names;
    for (int i = 1; i <= s; ++i)
        for (int j = i + 1; j <= s; ++j) {
            std::ostringstream os;
            os << "z" << i << j;
            names.push_back(os.str());
        }
    return names;
}

RegistryPtr sp_invariant_ring(int s) {
    auto names = sp_invariant_names(s);
    return VariableRegistry::make(names, std::vector<int>(names.size(), 2));
}

namespace {

Polynomial zvar(const RegistryPtr& zring, int i, int j) { // 1-based, i < j
    std::ostringstream os;
    os << "z" << i << j;
    return Polynomial::variable(zring, os.str());
}

} // namespace

std::vector<Polynomial> pluecker_relations(const RegistryPtr& zring, int s) {
    if (s != 4 && s != 6) throw std::invalid_argument("pluecker_relations: s must be 4 or 6");
    std::vector<Polynomial> rels;
    for (int i = 1; i <= s; ++i)
        for (int j = i + 1; j <= s; ++j)
            for (int k = j + 1; k <= s; ++k)
                for (int l = k + 1; l <= s; ++l)
                    rels.push_back(zvar(zring, i, j) * zvar(zring, k, l) -
                                   zvar(zring, i, k) * zvar(zring, j, l) +
                                   zvar(zring, i, l) * zvar(zring, j, k));
    if (s == 6) {
        rels.push_back(zvar(zring, 1, 4) * zvar(zring, 2, 5) * zvar(zring, 3, 6) +
                       zvar(zring, 2, 4) * zvar(zring, 3, 5) * zvar(zring, 1, 6) +
                       zvar(zring, 3, 4) * zvar(zring, 1, 5) * zvar(zring, 2, 6) -
                       zvar(zring, 1, 4) * zvar(zring, 3, 5) * zvar(zring, 2, 6) -
                       zvar(zring, 2, 4) * zvar(zring, 1, 5) * zvar(zring, 3, 6) -
                       zvar(zring, 3, 4) * zvar(zring, 2, 5) * zvar(zring, 1, 6));
    }
    return rels;
}

RatMatrix nu_map(const RatMatrix& X, int n, int m) {
    if (X.rows() != 2 * n || X.cols() != 2 * m)
        throw std::invalid_argument("nu_map: X must be 2n x 2m");
    return X.transpose() * standard_symplectic_form(n) * X * hyperbolic_form(m);
}

bool z_membership(const RatMatrix& A, int n, int m) {
    if (A.rows() != 2 * m || A.cols() != 2 * m) return false;
    const RatMatrix Q = hyperbolic_form(m);
    if (-(Q * A.transpose() * Q) != A) return false; // A in so(Q)
    if (!(A * A).is_zero()) return false;
    return A.rank() <= std::min(2 * n, m);
}

RatMatrix orbit_preimage(const RatMatrix& A, int n, int m) {
    if (!z_membership(A, n, m))
        throw std::invalid_argument("orbit_preimage: input fails Z membership");
    const RatMatrix Q = hyperbolic_form(m);
    const SkewNormalForm snf = skew_normal_form(A * Q);
    const int k = snf.rank / 2;
    const RatMatrix Sinv = snf.S.inverse();
    // T = (I_2k | 0) S: the first 2k rows of S
    RatMatrix T(2 * k, 2 * m);
    for (int i = 0; i < 2 * k; ++i)
        for (int j = 0; j < 2 * m; ++j) T.at(i, j) = snf.S.at(i, j);
    RatMatrix X;
    if (k == n) {
        X = T;
    } else {
        // exact symplectic embedding C^{2k} -> C^{2n}: e_i -> e_i, f_i -> f_i
        RatMatrix U(2 * n, 2 * k);
        for (int i = 0; i < k; ++i) {
            U.at(i, i) = Rational(1);
            U.at(n + i, k + i) = Rational(1);
        }
        X = U * T;
    }
    if (nu_map(X, n, m) != A || !(X * Q * X.transpose()).is_zero())
        throw std::logic_error("orbit_preimage: construction failed verification");
    return X;
}

// ---- partitions ----

int Partition::sum() const {
    int s = 0;
    for (int d : parts) s += d;
    return s;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << "]";
    if (label) os << (*label == Label::I ? "^I" : "^II");
    return os.str();
}

bool so_admissible(const Partition& p, int m) {
    if (p.sum() != 2 * m) return false;
    for (size_t i = 0; i < p.parts.size(); ++i) {
        if (p.parts[i] < 1) return false;
        if (i + 1 < p.parts.size() && p.parts[i] < p.parts[i + 1]) return false;
    }
    for (size_t i = 0; i < p.parts.size();) {
        size_t j = i;
        while (j < p.parts.size() && p.parts[j] == p.parts[i]) ++j;
        if (p.parts[i] % 2 == 0 && (j - i) % 2 != 0) return false;
        i = j;
    }
    return true;
}

bool fu_resolvable(const Partition& p) {
    if (p.sum() % 2 != 0 || !so_admissible(p, p.sum() / 2))
        throw std::invalid_argument("fu_resolvable: partition not so-admissible");
    const auto& d = p.parts;
    const size_t N = d.size();
    // first clause: an even q != 2 with d_1..d_q odd, d_{q+1}..d_N even
    size_t q = 0;
    while (q < N && d[q] % 2 != 0) ++q;
    bool tail_even = true;
    for (size_t i = q; i < N; ++i)
        if (d[i] % 2 != 0) tail_even = false;
    if (tail_even && q % 2 == 0 && q != 2) return true;
    // second clause: exactly two odd parts, at positions 2k-1 and 2k (1-based)
    std::vector<size_t> odd;
    for (size_t i = 0; i < N; ++i)
        if (d[i] % 2 != 0) odd.push_back(i + 1);
    return odd.size() == 2 && odd[1] == odd[0] + 1 && odd[0] % 2 == 1;
}

namespace {

Partition stratum_partition(int k, int m) {
    Partition p;
    for (int i = 0; i < 2 * k; ++i) p.parts.push_back(2);
    for (int i = 0; i < 2 * (m - 2 * k); ++i) p.parts.push_back(1);
    p.very_even = (2 * k == m);
    return p;
}

} // namespace

std::vector<Partition> orbit_decomposition(int n, int m) {
    const int top_rank = (m % 2 == 0) ? m : m - 1;
    if (top_rank > std::min(2 * n, m))
        throw std::invalid_argument("orbit_decomposition: rank bound below the stratification");
    std::vector<Partition> out;
    if (m % 2 == 1) {
        for (int k = 0; k <= (m - 1) / 2; ++k) out.push_back(stratum_partition(k, m));
    } else {
        for (int k = 0; k <= m / 2 - 1; ++k) out.push_back(stratum_partition(k, m));
        Partition one = stratum_partition(m / 2, m);
        one.label = Partition::Label::I;
        Partition two = one;
        two.label = Partition::Label::II;
        out.push_back(std::move(one));
        out.push_back(std::move(two));
    }
    return out;
}

RatMatrix orbit_representative(int k, int m) {
    if (k < 0 || 2 * k > m) throw std::invalid_argument("orbit_representative: need 2k <= m");
    RatMatrix A(2 * m, 2 * m);
    for (int j = 1; j <= k; ++j) {
        A.at(2 * j - 2, m + 2 * j - 1) = Rational(1);
        A.at(2 * j - 1, m + 2 * j - 2) = Rational(-1);
    }
    return A;
}

// ---- reducedness witnesses ----

namespace {

// Symbolic A = Z Q with Z the skew matrix of the z_ij.
PolyMatrix symbolic_quotient_matrix(const RegistryPtr& zring, int s) {
    PolyMatrix Z(zring, s, s);
    int idx = 0;
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) {
            Z.at(i, j) = Polynomial::variable(zring, idx);
            Z.at(j, i) = -Z.at(i, j);
            ++idx;
        }
    const int m2 = s / 2;
    PolyMatrix Q = PolyMatrix::from_rational(zring, hyperbolic_form(m2));
    return Z * Q;
}

std::map<int, Polynomial> invariant_substitution(const RegistryPtr& zring,
                                                 const std::vector<Polynomial>& images) {
    std::map<int, Polynomial> sub;
    for (int i = 0; i < zring->size(); ++i) sub.emplace(i, images[static_cast<size_t>(i)]);
    return sub;
}

} // namespace

SpQuotientFacts reducedness_witnesses(int n, int m, const ResourceLimits& limits) {
    if (n != 1 || m < 1 || m > 3)
        throw std::invalid_argument("reducedness_witnesses: implemented for n = 1, m in 1..3");
    SpQuotientFacts facts;
    facts.n = n;
    facts.m = m;
    auto& rep = facts.report;
    rep.id = "sp:" + std::to_string(n) + ":" + std::to_string(m);

    const SpInstance sp = SpInstance::make(n, m);
    const Ideal imu = sp_moment_ideal(sp);
    const GroebnerBasis gb = buchberger(imu, MonomialOrder::grevlex(), limits);
    facts.moment_dim = krull_dimension(gb);

    const int s = 2 * m;
    const auto images = sp_invariants(sp, s);
    const RegistryPtr zring = sp_invariant_ring(s);
    const auto sub = invariant_substitution(zring, images);
    const PolyMatrix A = symbolic_quotient_matrix(zring, s);

    auto in_kernel = [&](const Polynomial& zpoly) {
        return normal_form(zpoly.substitute(sub), gb).is_zero();
    };

    if (m == 1) {
        rep.claim = "the zero fibre for one doubled copy is not reduced: det X generates the "
                    "invariants, det X is missing from the momentum ideal, its square is not";
        rep.anchor = "Sec. 3, example m = 1 and the remark following Thm. reducedness";
        const Polynomial det = images.at(0);
        facts.det_not_in_ideal = !normal_form(det, gb).is_zero();
        facts.det_square_in_ideal = normal_form(det * det, gb).is_zero();
        rep.check("detX not in momentum ideal", facts.det_not_in_ideal);
        rep.check("(detX)^2 in momentum ideal", facts.det_square_in_ideal);
        rep.check("radical membership of detX", radical_membership(det, imu, limits));
        rep.witness("dim V(I_mu)", std::to_string(facts.moment_dim.value_or(-1)));
        return facts;
    }

    if (m == 2) {
        rep.claim = "doubled two-copy case: dim mu^-1(0) = 5; the six invariants satisfy eleven "
                    "relations; A^2 entries and Pf(QA) present the reduced quotient";
        rep.anchor = "Sec. 3, Thm. reducedness + the so_4 identification";
        rep.check("krull dimension of I_mu = 5", facts.moment_dim == 5);

        RingMapKernelQuery q;
        q.source_names = sp_invariant_names(s);
        q.source_weights.assign(q.source_names.size(), 2);
        q.target_ring = sp.ring;
        q.images = images;
        q.modulus = imu.generators();
        const RingMapKernel ker = ring_map_kernel_full(q, limits);
        const auto mingens = minimal_generators_by_degree(ker.kernel().generators());
        int total = 0;
        for (const auto& [deg, cnt] : mingens) total += cnt;
        facts.kernel_min_generators = total;
        rep.check("kernel of the six invariants has 11 minimal generators", total == 11);
        {
            std::ostringstream os;
            for (const auto& [deg, cnt] : mingens) os << cnt << " in weight " << deg << "; ";
            rep.witness("kernel minimal generators", os.str());
        }

        bool contained = true;
        const PolyMatrix A2 = A * A;
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j)
                if (!A2.at(i, j).is_zero() && !in_kernel(A2.at(i, j))) contained = false;
        const PolyMatrix QA =
            PolyMatrix::from_rational(zring, hyperbolic_form(m)) * symbolic_quotient_matrix(zring, s);
        const Polynomial pf = pfaffian(QA);
        if (!in_kernel(pf)) contained = false;
        facts.reduction_equations_in_kernel = contained;
        rep.check("A^2 entries and Pf(QA) lie in the kernel", contained);
        facts.quotient_dim = krull_dimension(ker.kernel_gb());
        rep.witness("quotient dimension", std::to_string(facts.quotient_dim.value_or(-1)));
        return facts;
    }

    // m == 3
    rep.claim = "doubled three-copy case: dim mu^-1(0) = 9; the quotient is the rank <= 2 "
                "square-zero locus in so_6 of dimension 6, cut out by A^2, the 3x3 minors "
                "and the fifteen sub-Pfaffians";
    rep.anchor = "Sec. 3, six-dimensional quotient display";
    rep.check("krull dimension of I_mu = 9", facts.moment_dim == 9);

    bool contained = true;
    const PolyMatrix A2 = A * A;
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            if (!A2.at(i, j).is_zero() && !in_kernel(A2.at(i, j))) contained = false;
    rep.check("A^2 entries vanish on the quotient", contained);

    bool minors_ok = true;
    const Ideal rank_minors = minor_ideal(A, 3);
    for (const auto& g : rank_minors.generators())
        if (!in_kernel(g)) minors_ok = false;
    rep.check("rank <= 2 minors vanish on the quotient", minors_ok);

    bool pf_ok = true;
    const PolyMatrix QA =
        PolyMatrix::from_rational(zring, hyperbolic_form(m)) * symbolic_quotient_matrix(zring, s);
    std::vector<int> sel;
    {
        // all 4x4 principal skew submatrices of QA
        std::vector<std::vector<int>> quads;
        std::vector<int> cur;
        std::function<void(int)> rec = [&](int start) {
            if (cur.size() == 4) {
                quads.push_back(cur);
                return;
            }
            for (int i = start; i < s; ++i) {
                cur.push_back(i);
                rec(i + 1);
                cur.pop_back();
            }
        };
        rec(0);
        for (const auto& qs : quads) {
            const Polynomial pf4 = pfaffian(QA.submatrix(qs, qs));
            if (!pf4.is_zero() && !in_kernel(pf4)) pf_ok = false;
        }
    }
    rep.check("all fifteen 4x4 sub-Pfaffians of QA vanish on the quotient", pf_ok);
    facts.reduction_equations_in_kernel = contained && minors_ok && pf_ok;

    RingMapKernelQuery q;
    q.source_names = sp_invariant_names(s);
    q.source_weights.assign(q.source_names.size(), 2);
    q.target_ring = sp.ring;
    q.images = images;
    q.modulus = imu.generators();
    const RingMapKernel ker = ring_map_kernel_full(q, limits);
    facts.quotient_dim = krull_dimension(ker.kernel_gb());
    rep.check("quotient has dimension 6", facts.quotient_dim == 6);
    return facts;
}

} // namespace momenta
