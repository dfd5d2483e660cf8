#ifndef MOMENTA_REGISTRY_HPP
#define MOMENTA_REGISTRY_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace momenta {

// Hard cap on ring size; the largest ring in the verification suite has 27
// variables plus one auxiliary variable for saturation tricks.
inline constexpr int kMaxVars = 32;

// Ordered set of named variables with positive integer grading weights.
// Immutable after construction and shared by reference between polynomials.
class VariableRegistry {
public:
    static std::shared_ptr<const VariableRegistry>
    make(std::vector<std::string> names, std::vector<int> weights = {});

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(static_cast<size_t>(i)); }
    int weight(int i) const { return weights_.at(static_cast<size_t>(i)); }
    const std::vector<int>& weights() const { return weights_; }
    std::optional<int> find(std::string_view name) const;

private:
    VariableRegistry(std::vector<std::string> names, std::vector<int> weights);

    std::vector<std::string> names_;
    std::vector<int> weights_;
    std::unordered_map<std::string, int> index_;
};

using RegistryPtr = std::shared_ptr<const VariableRegistry>;

// Registries are value-compared: same names and weights in the same order.
bool same_ring(const RegistryPtr& a, const RegistryPtr& b);

} // namespace momenta

#endif
