#ifndef MOMENTA_REPORT_HPP
#define MOMENTA_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace momenta {

enum class Verdict { Pass, Fail, Skipped, ResourceLimit };

std::string verdict_name(Verdict v);

// Pass/fail record for one verified claim: what was checked, where the claim
// lives in the source text, the witnesses that reproduce the verdict, and the
// wall-clock cost.
struct VerificationReport {
    std::string id;
    std::string claim;
    std::string anchor;
    Verdict verdict = Verdict::Pass;
    std::vector<std::string> witnesses;
    int64_t millis = 0;

    // fold a sub-check into the verdict and record it
    void check(const std::string& label, bool ok) {
        witnesses.push_back(label + ": " + (ok ? "pass" : "FAIL"));
        if (!ok) verdict = Verdict::Fail;
    }
    void witness(const std::string& label, const std::string& value) {
        witnesses.push_back(label + ": " + value);
    }
    bool passed() const { return verdict == Verdict::Pass; }
};

// Canonical JSON: array of {id, claim, anchor, verdict, witnesses[], millis},
// sorted by id. With deterministic_millis the timing field is zeroed so that
// identical runs emit byte-identical reports.
std::string reports_to_json(std::vector<VerificationReport> reports,
                            bool deterministic_millis = true);

std::string reports_to_text(const std::vector<VerificationReport>& reports);

} // namespace momenta

#endif
