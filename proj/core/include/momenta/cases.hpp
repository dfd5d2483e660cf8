#ifndef MOMENTA_CASES_HPP
#define MOMENTA_CASES_HPP

#include "momenta/report.hpp"
#include "momenta/ideal.hpp"

#include <string>
#include <vector>

namespace momenta {

struct CaseOptions {
    uint64_t seed = 0;
    uint32_t degree_bound = 0; // Buchberger cap, 0 = unlimited
    int timeout_seconds = 0;   // per case, 0 = unlimited
    std::string export_dir;    // write constructed ideals here when nonempty
};

// Canonical case list (everything `all` runs, in report order).
std::vector<std::string> case_ids();
bool is_known_case(const std::string& id);

// Runs one case (or "all") and returns the per-claim reports. Resource-limit
// hits produce a report with the resource-limit verdict instead of throwing.
std::vector<VerificationReport> run_case(const std::string& id, const CaseOptions& opts = {});

} // namespace momenta

#endif
