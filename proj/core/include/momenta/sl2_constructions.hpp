#ifndef MOMENTA_SL2_CONSTRUCTIONS_HPP
#define MOMENTA_SL2_CONSTRUCTIONS_HPP

#include "momenta/ideal_ops.hpp"
#include "momenta/poly_matrix.hpp"
#include "momenta/random.hpp"
#include "momenta/report.hpp"

namespace momenta {

// ---- binary forms (symmetric powers of the standard Sl_2 representation) ----

// Coefficients in the binomial convention a0 x^3 + 3 a1 x^2 y + ... resp.
// a0 x^4 + 4 a1 x^3 y + 6 a2 x^2 y^2 + ...
struct BinaryForm {
    int degree = 3;
    std::vector<Polynomial> coef; // degree + 1 entries

    const RegistryPtr& ring() const { return coef.at(0).ring(); }
};

// QQ[a0..ad, b0..bd] and the two generic forms over it.
RegistryPtr sym_double_ring(int d);
BinaryForm generic_form(const RegistryPtr& ring, int d, char which); // 'a' or 'b'

// The invariant pairings: d = 3 antisymmetric, d = 4 symmetric.
Polynomial sigma_pairing(int d, const BinaryForm& A, const BinaryForm& B);

// disc = -4 a0 a2^3 - 4 a1^3 a3 - a0^2 a3^2 + 3 a1^2 a2^2 + 6 a0 a1 a2 a3.
Polynomial discriminant_cubic(const BinaryForm& A);

// Quartic invariants: Q = a0 a4 - 4 a1 a3 + 3 a2^2, the catalecticant C, and
// the joint invariant T of a pair.
Polynomial quartic_q(const BinaryForm& A);
Polynomial quartic_catalecticant(const BinaryForm& A);
Polynomial quartic_t(const BinaryForm& A, const BinaryForm& B);

// Coefficients of lambda^0..lambda^r in f(A + lambda B); f must be
// homogeneous of degree r in the form coefficients.
std::vector<Polynomial> polarize(const std::function<Polynomial(const BinaryForm&)>& f,
                                 const BinaryForm& A, const BinaryForm& B, int r);

// The displayed momentum ideals of the doubled S^d actions, d in {3, 4}.
Ideal sym_moment_ideal(int d);

// Left action of g on a form: x^i y^j -> (gx)^i (gy)^j, re-read in the
// binomial coordinate convention. Used by the invariance tests.
BinaryForm act_on_form(const RatMatrix& g, const BinaryForm& A);

// ---- diagonal correspondences between graded presentations ----

// Weight-preserving tag bijection with per-tag scalars kappa mapping one
// relation ideal onto another.
struct DiagonalCorrespondence {
    std::vector<int> perm;        // source tag i -> target tag perm[i]
    std::vector<Rational> scale;  // kappa_i
    std::string describe(const RegistryPtr& from, const RegistryPtr& to) const;
};

// Search the family of scaled weight-preserving bijections for a map with
// image(kernel1) = kernel2; scalars are solved from the lowest-degree kernel
// pieces and the candidate is verified on every generator in both
// directions.
std::optional<DiagonalCorrespondence>
discover_diagonal_correspondence(const RingMapKernel& k1, const RingMapKernel& k2);

// ---- verification bundles for the symmetric powers ----

struct Sym3Facts {
    bool relation_in_ideal = false;       // 16 d0 d4 - F^4 vanishes mod I_mu
    bool kernel_is_principal = false;     // radical-level equality both ways
    bool middle_polars_expressible = false; // d1, d2, d3 in QQ[F, d0, d4]
    VerificationReport report;
};
Sym3Facts sym3_quotient_check(const ResourceLimits& limits = {});

struct Sym4Facts {
    bool t_expressible = false;
    std::vector<int64_t> graded_dims_sym4;  // through degree 8
    std::vector<int64_t> graded_dims_s3;
    bool graded_dims_agree = false;
    bool reynolds_idempotent = false;
    bool correspondence_found = false;
    bool correspondence_verified = false;
    VerificationReport report;
};
Sym4Facts sym4_quotient_check(const ResourceLimits& limits = {});

// ---- the adjoint / SO_3 cases ----

// n = 1: QQ[x1..x3, y1..y3]; n = 2: QQ[x, y, z, u] with four vectors.
// Generators are the displayed 2x2-minor combinations.
RegistryPtr so3_ring(int n);
Ideal so3_moment_ideal(int n);
// -(1/2) X J X^t Q as a symbolic matrix (the displayed moment map).
PolyMatrix so3_moment_matrix(int n);
// t_ij = <x^(i), x^(j)>, i <= j <= s, for the standard euclidean structure.
std::vector<Polynomial> so3_pairing_invariants(int n, int s);
std::vector<std::string> so3_pairing_names(int s);
// det(x^(i1) | x^(i2) | x^(i3)) over the chosen triples (n = 2 double only).
std::vector<Polynomial> so3_determinant_invariants();

struct So3Facts {
    bool theta1_kernel_principal = false; // kernel = (t12^2 - t11 t22)
    bool determinants_expressible = false;
    std::optional<int> theta2_moment_dim; // expect 9
    std::optional<int> theta2_quotient_dim; // expect 6
    bool quotient_dim_matches_orbit = false; // 6 = dim mu^-1(0) - 3
    VerificationReport report;
};
So3Facts so3_quotient_checks(const ResourceLimits& limits = {});

// ---- Sl_2 acting on sl_2 + C^2 ----

struct Sl2DoubleInstance {
    RegistryPtr ring; // a11, a12, a21, b11, b12, b21, x1, x2, y1, y2
    PolyMatrix A, B;  // traceless
    PolyMatrix x, y;  // column vectors

    static Sl2DoubleInstance make();
};

// ([A,B] + x y^t - (1/2) y^t x I) entries, scaled to integer content.
Ideal sl2c2_moment_ideal(const Sl2DoubleInstance& inst);

// The thirteen generating invariants of the double, in the order
// detA, detB, trAB, y^t x, y^t A x, y^t B x, y^t AB x,
// det(x|Ax), det(x|Bx), det(x|ABx), det(y|A^t y), det(y|B^t y), det(y|(AB)^t y).
std::vector<Polynomial> sl2c2_invariants(const Sl2DoubleInstance& inst);

// Presentation ring QQ[z1..z8], weights (2,2,2,2,3,3,3,3).
RegistryPtr sl2c2_presentation_ring();
// h1..h9.
std::vector<Polynomial> sl2c2_relations(const RegistryPtr& zring);
// The 3x3 arrangement whose 2x2 minors present the relations.
PolyMatrix sl2c2_relation_matrix(const RegistryPtr& zring);
// Images of z1..z8. The relations h_i hold with z4 = -(y^t x); the sign is
// forced by the momentum ideal (see the regression test pinning it).
std::vector<Polynomial> sl2c2_presentation_images(const Sl2DoubleInstance& inst);

// Substitution realizing (A,x,y,B) -> (gAg^-1, gx, (g^t)^-1 y, gBg^-1).
std::map<int, Polynomial> sl2c2_group_substitution(const Sl2DoubleInstance& inst,
                                                   const RatMatrix& g);

struct Sl2c2Facts {
    bool h_vanish = false;                 // all nine, after substitution
    bool minors_match = false;             // bijection with scalars in {1,-1,1/4}
    bool omitted_expressible = false;      // the five omitted invariants
    bool kernel_equals_relations = false;  // exact ideal equality
    std::optional<int> relation_dim;       // expect 4
    bool singular_locus_identified = false;
    std::optional<int> moment_dim;         // expect 7
    VerificationReport report;
};
Sl2c2Facts sl2c2_presentation_check(const ResourceLimits& limits = {});

} // namespace momenta

#endif
