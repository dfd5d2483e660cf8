#include "momenta/report.hpp"

#include <algorithm>
#include <sstream>

namespace momenta {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Skipped: return "skipped";
        case Verdict::ResourceLimit: return "resource-limit";
    }
    return "?";
}

namespace {

void json_escape(std::ostringstream& os, const std::string& s) {
    os << '"';
    for (char c : s) {
        switch (c) {
            case '"': os << "\\\""; break;
            case '\\': os << "\\\\"; break;
            case '\n': os << "\\n"; break;
            case '\t': os << "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    os << buf;
                } else {
                    os << c;
                }
        }
    }
    os << '"';
}

} // namespace

std::string reports_to_json(std::vector<VerificationReport> reports, bool deterministic_millis) {
    std::sort(reports.begin(), reports.end(),
              [](const VerificationReport& a, const VerificationReport& b) { return a.id < b.id; });
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        if (i) os << ",";
        os << "\n  {\"id\": ";
        json_escape(os, r.id);
        os << ", \"claim\": ";
        json_escape(os, r.claim);
        os << ", \"anchor\": ";
        json_escape(os, r.anchor);
        os << ", \"verdict\": ";
        json_escape(os, verdict_name(r.verdict));
        os << ", \"witnesses\": [";
        for (size_t k = 0; k < r.witnesses.size(); ++k) {
            if (k) os << ", ";
            json_escape(os, r.witnesses[k]);
        }
        os << "], \"millis\": " << (deterministic_millis ? 0 : r.millis) << "}";
    }
    os << "\n]\n";
    return os.str();
}

std::string reports_to_text(const std::vector<VerificationReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        os << "[" << verdict_name(r.verdict) << "] " << r.id << "  (" << r.millis << " ms)\n";
        os << "    " << r.claim << "  --  " << r.anchor << "\n";
        for (const auto& w : r.witnesses) os << "    . " << w << "\n";
    }
    return os.str();
}

} // namespace momenta
