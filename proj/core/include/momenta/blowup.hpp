#ifndef MOMENTA_BLOWUP_HPP
#define MOMENTA_BLOWUP_HPP

#include "momenta/sl2_constructions.hpp"

namespace momenta {

// Affine chart of the blow-up of C^8 along a coordinate subspace, restricted
// to the quotient V(h1..h9). The strict transform is the saturation of the
// total transform by the chart's exceptional coordinate.
struct BlowupChart {
    std::string name;                  // dehomogenized coordinate, e.g. "x4"
    RegistryPtr ring;                  // z1..z8 plus the remaining chart variables
    int exceptional;                   // ring index of z_c
    std::vector<Polynomial> total;     // cross relations + dehomogenized minors
    Ideal strict;                      // saturation(total, z_c)
    std::optional<GroebnerBasis> strict_gb;

    // When the strict transform is the graph of a polynomial map over four
    // free coordinates, holds the solved form {var -> expression}; that is
    // the shape every chart of the full resolution takes.
    std::map<int, Polynomial> graph;
    bool is_graph = false;

    Ideal total_ideal() const { return Ideal(ring, total); }
};

// The five charts x4..x8 of the resolution of V(h): cross relations
// z_i x_j = z_j x_i plus the 2x2 minors of the arrangement with the last row
// and column replaced by homogeneous coordinates. Graph forms are derived
// from the computed strict transforms, not assumed.
std::vector<BlowupChart> build_ztilde_charts(const ResourceLimits& limits = {});

// The three charts y4, y7, y8 of the partial blow-up along V(z4, z7, z8).
std::vector<BlowupChart> build_y_charts(const ResourceLimits& limits = {});

// The local rank <= 1 matrix of the y4 chart (trace zero), and its 2x2-minor
// presentation of the chart.
PolyMatrix y4_local_matrix(const RegistryPtr& chart_ring);

enum class Stratum { Regular, SingularMinusOrigin, Origin };
enum class Projection { Pi, Pi2 };

struct FiberSpec {
    std::vector<Rational> base; // point of V(h) in C^8
    Stratum stratum;
};

struct FiberFacts {
    std::optional<int> cone_dim;  // affine dimension of the fibre cone
    bool parametrization_ok = false;
    bool ideal_identified = false; // stratum-specific ideal comparison
    VerificationReport report;
};

FiberFacts fiber_check(const FiberSpec& spec, Projection which, uint64_t seed = 0,
                       const ResourceLimits& limits = {});

// Search a rational point of V(h) \ V(z4..z8) by evaluating the invariant
// presentation on points of the zero fibre of the moment map.
std::vector<Rational> regular_stratum_point(uint64_t seed);

struct SemismallFacts {
    std::vector<int> stratum_dims;   // dim Z, dim Z_sing, dim {0}
    std::vector<int> fiber_dims;     // projective fibre dimensions (0, 1, 2)
    bool semismall = false;
    VerificationReport report;
};
SemismallFacts semismall_check(const ResourceLimits& limits = {});

struct DivisorFacts {
    std::vector<int> codims;         // one per chart
    bool all_one = false;
    VerificationReport report;
};
DivisorFacts divisor_codim_check(const std::vector<BlowupChart>& ztilde,
                                 const ResourceLimits& limits = {});

struct SwapFacts {
    bool corrected_swap_fixes_relations = false; // with z4 -> -z4
    bool plain_swap_fixes_relations = false;     // literal z5<->z7, z6<->z8 only
    VerificationReport report;
};
// The automorphism interchanging the two partial blow-up centers:
// z5 <-> z7, z6 <-> z8 together with z4 -> -z4 maps (h1..h9) to itself.
SwapFacts relation_swap_check(const ResourceLimits& limits = {});

} // namespace momenta

#endif
