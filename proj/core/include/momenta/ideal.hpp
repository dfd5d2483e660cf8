#ifndef MOMENTA_IDEAL_HPP
#define MOMENTA_IDEAL_HPP

#include "momenta/polynomial.hpp"

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace momenta {

// Generator list for an ideal. Zero generators are dropped on construction;
// all generators must share the ring.
class Ideal {
public:
    Ideal() = default; // placeholder without a ring; assign before use
    Ideal(RegistryPtr ring, std::vector<Polynomial> gens);

    const RegistryPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }

private:
    RegistryPtr ring_;
    std::vector<Polynomial> gens_;
};

// Caps for the Buchberger loop. Zero means unlimited. Exceeding a cap raises
// ResourceLimitError, which is distinct from any mathematical failure mode.
struct ResourceLimits {
    uint64_t max_pairs = 0;   // processed S-pairs
    uint32_t max_degree = 0;  // weighted degree of an S-pair lcm
    std::optional<std::chrono::steady_clock::time_point> deadline;

    ResourceLimits() = default;
};

class ResourceLimitError : public std::runtime_error {
public:
    enum class Kind { Pairs, Degree, Timeout };
    ResourceLimitError(Kind k, const std::string& what)
        : std::runtime_error(what), kind_(k) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

} // namespace momenta

#endif
