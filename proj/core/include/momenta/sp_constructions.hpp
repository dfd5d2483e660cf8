#ifndef MOMENTA_SP_CONSTRUCTIONS_HPP
#define MOMENTA_SP_CONSTRUCTIONS_HPP

#include "momenta/ideal_ops.hpp"
#include "momenta/poly_matrix.hpp"
#include "momenta/random.hpp"
#include "momenta/report.hpp"

#include <optional>

namespace momenta {

// The doubled Sp_{2n} action on 2m copies of C^{2n}: coordinates x_{i,j}
// arranged as a 2n x 2m matrix X = (X' | X''), with the symplectic form
// J = [[0,I_n],[-I_n,0]] and the hyperbolic form Q = [[0,I_m],[I_m,0]].
struct SpInstance {
    int n = 1, m = 1;
    RegistryPtr ring;      // x_{i,j}, row-major declaration order
    PolyMatrix X;          // 2n x 2m of variables
    PolyMatrix J;          // 2n x 2n
    PolyMatrix Q;          // 2m x 2m

    static SpInstance make(int n, int m);
    int var(int i, int j) const { return i * 2 * m + j; } // 0-based
};

// Momentum ideal: the upper triangle (diagonal included) of X Q X^t, each
// generator normalized to integer content 1. binom(2n+1, 2) generators.
Ideal sp_moment_ideal(const SpInstance& sp);

// First-fundamental-theorem invariants z_ij = (x^(i))^t J x^(j), i < j <= s.
std::vector<Polynomial> sp_invariants(const SpInstance& sp, int s);

// Ring QQ[z_ij : i<j<=s] with weight 2 per variable (x-degree of the image).
RegistryPtr sp_invariant_ring(int s);
std::vector<std::string> sp_invariant_names(int s);

// s = 4: the single Pluecker relation J1; s = 6: the fifteen Pluecker
// relations followed by the cubic J2.
std::vector<Polynomial> pluecker_relations(const RegistryPtr& zring, int s);

// nu(X) = X^t J X Q.
RatMatrix nu_map(const RatMatrix& X, int n, int m);

// A in so(Q) with A^2 = 0 and rk A <= min(2n, m).
bool z_membership(const RatMatrix& A, int n, int m);

// Constructive section of nu: X with X^t J X Q = A and X Q X^t J = 0,
// via the skew normal form of AQ and an exact rational symplectic embedding
// (no square roots are ever needed).
RatMatrix orbit_preimage(const RatMatrix& A, int n, int m);

// ---- nilpotent orbit combinatorics ----

struct Partition {
    std::vector<int> parts;                 // weakly decreasing, positive
    bool very_even = false;                 // all parts even (with even multiplicity)
    enum class Label { I, II };
    std::optional<Label> label;             // set only for very even partitions

    int sum() const;
    std::string str() const;
};

// so_{2m}-admissibility: parts sum to 2m and every even part has even
// multiplicity.
bool so_admissible(const Partition& p, int m);

// Fu's criterion: the closure of the so orbit of p admits a symplectic
// resolution iff either some even q != 2 splits the parts into q odd parts
// followed by even ones, or exactly two parts are odd and they sit at
// positions 2k-1, 2k.
bool fu_resolvable(const Partition& p);

// Stratification of Z = {A in so_{2m} : A^2 = 0, rk A <= min(2n,m)} by
// nilpotent orbits; the open stratum carries the closure description
// ([2^{m-1},1^2] for odd m, the two labeled copies of [2^m] for even m).
std::vector<Partition> orbit_decomposition(int n, int m);

// Block-sum representative of [2^{2k}, 1^{2(m-2k)}] inside so_{2m}.
RatMatrix orbit_representative(int k, int m);

// ---- the per-(n,m) verification bundle ----

struct SpQuotientFacts {
    int n = 0, m = 0;
    std::optional<int> moment_dim;          // krull dimension of I_mu
    std::optional<int> quotient_dim;        // dimension of the invariant kernel
    bool det_not_in_ideal = false;          // m = 1 witnesses
    bool det_square_in_ideal = false;
    int kernel_min_generators = -1;         // m = 2 (eleven relations)
    bool reduction_equations_in_kernel = false; // A^2 / Pfaffian / minor data
    VerificationReport report;
};

// n = 1, m in {1, 2, 3}. Runs the reducedness/dimension/quotient checks of
// the corresponding example and packages them as a report.
SpQuotientFacts reducedness_witnesses(int n, int m, const ResourceLimits& limits = {});

} // namespace momenta

#endif
