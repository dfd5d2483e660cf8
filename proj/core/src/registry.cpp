#include "momenta/registry.hpp"

#include <stdexcept>

namespace momenta {

VariableRegistry::VariableRegistry(std::vector<std::string> names, std::vector<int> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
    if (names_.size() > static_cast<size_t>(kMaxVars))
        throw std::invalid_argument("VariableRegistry: too many variables");
    if (weights_.empty()) weights_.assign(names_.size(), 1);
    if (weights_.size() != names_.size())
        throw std::invalid_argument("VariableRegistry: weight count mismatch");
    for (int w : weights_)
        if (w < 1) throw std::invalid_argument("VariableRegistry: weights must be >= 1");
    for (size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw std::invalid_argument("VariableRegistry: empty name");
        auto [it, fresh] = index_.emplace(names_[i], static_cast<int>(i));
        (void)it;
        if (!fresh) throw std::invalid_argument("VariableRegistry: duplicate name " + names_[i]);
    }
}

std::shared_ptr<const VariableRegistry>
VariableRegistry::make(std::vector<std::string> names, std::vector<int> weights) {
    return std::shared_ptr<const VariableRegistry>(
        new VariableRegistry(std::move(names), std::move(weights)));
}

std::optional<int> VariableRegistry::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool same_ring(const RegistryPtr& a, const RegistryPtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    if (a->size() != b->size()) return false;
    for (int i = 0; i < a->size(); ++i)
        if (a->name(i) != b->name(i) || a->weight(i) != b->weight(i)) return false;
    return true;
}

} // namespace momenta
