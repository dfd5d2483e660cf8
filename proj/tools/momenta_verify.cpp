// Command-line driver: maps claim identifiers to verification cases and
// emits structured reports.

#include "momenta/cases.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <mutex>
#include <thread>

namespace {

int exit_code_for(const std::vector<momenta::VerificationReport>& reports) {
    bool limit = false, fail = false;
    for (const auto& r : reports) {
        if (r.verdict == momenta::Verdict::ResourceLimit) limit = true;
        if (r.verdict == momenta::Verdict::Fail) fail = true;
    }
    if (limit) return 3;
    return fail ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification suite for symplectic-reduction claims"};
    app.require_subcommand(1);

    std::string case_id;
    bool json = false;
    uint64_t seed = 0;
    uint32_t degree_bound = 0;
    int timeout = 0;
    int jobs = 1;
    std::string export_dir;

    CLI::App* run = app.add_subcommand("run", "run a verification case");
    run->add_option("case", case_id,
                    "one of sp:1:1, sp:1:2, sp:1:3, sym3, sym4, adjoint, sl2c2, blowup, "
                    "orbits, poincare, all")
        ->required();
    run->add_flag("--json", json, "emit the canonical JSON report");
    run->add_option("--seed", seed, "seed for the randomized checks (default 0)");
    run->add_option("--degree-bound", degree_bound,
                    "cap on S-pair degrees in the basis engine (0 = unlimited)");
    run->add_option("--timeout", timeout, "per-case wall-clock budget in seconds");
    run->add_option("--export-ideals", export_dir,
                    "write every constructed ideal to this directory (one polynomial per line)");
    run->add_option("--jobs", jobs, "worker threads for `all` (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (!momenta::is_known_case(case_id)) {
        std::cerr << "unknown case: " << case_id << "\n";
        return 2;
    }

    momenta::CaseOptions opts;
    opts.seed = seed;
    opts.degree_bound = degree_bound;
    opts.timeout_seconds = timeout;
    opts.export_dir = export_dir;

    std::vector<momenta::VerificationReport> reports;
    if (case_id == "all" && jobs > 1) {
        const auto ids = momenta::case_ids();
        std::vector<std::vector<momenta::VerificationReport>> parts(ids.size());
        std::mutex next_mutex;
        size_t next = 0;
        auto worker = [&] {
            while (true) {
                size_t mine;
                {
                    std::lock_guard<std::mutex> lock(next_mutex);
                    if (next >= ids.size()) return;
                    mine = next++;
                }
                parts[mine] = momenta::run_case(ids[mine], opts);
            }
        };
        std::vector<std::thread> pool;
        for (int i = 0; i < std::max(1, jobs); ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        for (auto& part : parts) reports.insert(reports.end(), part.begin(), part.end());
    } else {
        try {
            reports = momenta::run_case(case_id, opts);
        } catch (const std::invalid_argument& e) {
            std::cerr << e.what() << "\n";
            return 2;
        }
    }

    std::sort(reports.begin(), reports.end(),
              [](const momenta::VerificationReport& a, const momenta::VerificationReport& b) {
                  return a.id < b.id;
              });
    if (json)
        std::cout << momenta::reports_to_json(reports);
    else
        std::cout << momenta::reports_to_text(reports);
    return exit_code_for(reports);
}
