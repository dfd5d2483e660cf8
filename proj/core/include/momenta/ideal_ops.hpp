#ifndef MOMENTA_IDEAL_OPS_HPP
#define MOMENTA_IDEAL_OPS_HPP

#include "momenta/groebner.hpp"
#include "momenta/unirational.hpp"

#include <map>
#include <optional>

namespace momenta {

// ---- ring plumbing -------------------------------------------------------

// Registry with extra variables appended (fresh names are the caller's
// responsibility; weights default to 1).
RegistryPtr extend_registry(const RegistryPtr& ring, const std::vector<std::string>& names,
                            const std::vector<int>& weights = {});

// Transport a polynomial into another ring by variable name.
Polynomial rename_into(const Polynomial& p, const RegistryPtr& target);

// ---- ideal-level queries -------------------------------------------------

bool ideal_equality(const Ideal& I, const Ideal& J, const ResourceLimits& limits = {});
bool ideal_equality(const GroebnerBasis& gbI, const GroebnerBasis& gbJ);

// p in rad(I), via 1 in I + (1 - w p) in the extended ring.
bool radical_membership(const Polynomial& p, const Ideal& I, const ResourceLimits& limits = {});

// I cap k[keep], computed with a block order eliminating the complement.
// The result lives in the original ring.
Ideal elimination_ideal(const Ideal& I, const std::vector<int>& keep,
                        const ResourceLimits& limits = {});

// I : f^infinity, via (I + (1 - w f)) cap original ring.
Ideal saturation(const Ideal& I, const Polynomial& f, const ResourceLimits& limits = {});

// Dimension of the affine variety of I: maximal number of variables
// independent modulo the leading-term ideal of a grevlex basis.
// nullopt for the unit ideal (empty variety).
std::optional<int> krull_dimension(const Ideal& I, const ResourceLimits& limits = {});
std::optional<int> krull_dimension(const GroebnerBasis& gb);

// All maximum-size variable sets independent modulo the leading-term ideal,
// as bitmasks over the ring variables. Empty for the unit ideal.
std::vector<uint32_t> maximal_independent_sets(const GroebnerBasis& gb);

// ---- kernels of ring maps -------------------------------------------------

// Map QQ[source] -> QQ[target]/modulus, one image per source variable.
struct RingMapKernelQuery {
    std::vector<std::string> source_names;
    std::vector<int> source_weights;
    RegistryPtr target_ring;
    std::vector<Polynomial> images;
    std::vector<Polynomial> modulus; // generators in the target ring
};

// Kernel plus the by-products the verification cases reuse: the block-order
// basis of the joined ideal decides subalgebra membership questions.
class RingMapKernel {
public:
    const Ideal& kernel() const { return kernel_; }
    const GroebnerBasis& kernel_gb() const { return kernel_gb_; }
    const RegistryPtr& source_ring() const { return source_ring_; }
    const GroebnerBasis& joined_gb() const { return joined_gb_; }

    // If f (target ring) equals r(images) modulo the modulus, returns r in
    // the source ring; nullopt when f is not in the image subalgebra.
    std::optional<Polynomial> subalgebra_representation(const Polynomial& f) const;

private:
    friend RingMapKernel ring_map_kernel_full(const RingMapKernelQuery&, const ResourceLimits&);
    RingMapKernel(Ideal kernel, GroebnerBasis kernel_gb, RegistryPtr source_ring,
                  RegistryPtr joined_ring, GroebnerBasis joined_gb, std::vector<int> tag_of)
        : kernel_(std::move(kernel)), kernel_gb_(std::move(kernel_gb)),
          source_ring_(std::move(source_ring)), joined_ring_(std::move(joined_ring)),
          joined_gb_(std::move(joined_gb)), tag_of_source_(std::move(tag_of)) {}

    Ideal kernel_;
    GroebnerBasis kernel_gb_;
    RegistryPtr source_ring_;
    RegistryPtr joined_ring_;
    GroebnerBasis joined_gb_;
    std::vector<int> tag_of_source_; // joined index of each source variable
};

RingMapKernel ring_map_kernel_full(const RingMapKernelQuery& q,
                                   const ResourceLimits& limits = {});

// Spec-level entry point: just the kernel ideal, graded by source weights.
Ideal ring_map_kernel(const RingMapKernelQuery& q, const ResourceLimits& limits = {});

// ---- graded data ----------------------------------------------------------

// Hilbert series numerator over prod_i (1 - t^{w_i}); requires generators
// homogeneous for the ring weights.
struct HilbertSeries {
    UniPoly numerator;        // integer coefficients
    std::vector<int> weights; // ring weights, defining the denominator

    UniPoly denominator() const;
    UniRationalFunction as_rational_function() const;
    // graded dimensions of R/I through degree maxdeg
    std::vector<Rational> dimensions(int maxdeg) const;
};

HilbertSeries weighted_hilbert_series(const Ideal& I, const ResourceLimits& limits = {});
HilbertSeries weighted_hilbert_series(const GroebnerBasis& gb);

// Graded dimensions of the image subalgebra QQ[images] inside target/modulus
// (equivalently of QQ[source]/kernel), computed degree by degree by linear
// algebra — an elimination-free route used to cross-check kernels.
std::vector<int64_t> graded_algebra_dimensions(const std::vector<Polynomial>& images,
                                               const std::vector<int>& weights,
                                               const GroebnerBasis& modulus_gb, int maxdeg);

// Number of minimal generators per weighted degree of the ideal generated by
// `gens` (all weighted-homogeneous, in a common ring).
std::map<int64_t, int> minimal_generators_by_degree(const std::vector<Polynomial>& gens);

// ---- singular loci ---------------------------------------------------------

// I + all codim x codim minors of the Jacobian of the generators; the caller
// asserts I is equidimensional of that codimension.
Ideal singular_locus_ideal(const Ideal& I, int codim);

} // namespace momenta

#endif
