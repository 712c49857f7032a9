#ifndef GJTRIG_SUITES_HPP
#define GJTRIG_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace gjtrig {

// Randomized identity-verification suites. Every entry records the maximum
// residual seen over the trials together with its documented tolerance.
struct SuiteReport {
    struct Entry {
        std::string identity;
        double max_residual = 0.0;
        double tolerance = 0.0;
        bool informational = false; // reported but not gating
    };

    std::string suite;
    int trials = 0;
    std::uint64_t seed = 0;
    double tol_scale = 1.0;
    std::vector<Entry> entries;
    double wall_seconds = 0.0; // not part of the deterministic payload

    bool pass() const {
        for (const auto& e : entries)
            if (!e.informational && !(e.max_residual <= e.tolerance)) return false;
        return true;
    }
};

// Known suite names, in reporting order.
const std::vector<std::string>& suite_names();

// Run one suite; `trials` scales the sampling loops and `tol_scale`
// multiplies every documented tolerance.
SuiteReport run_suite(const std::string& name, int trials, std::uint64_t seed, double tol_scale = 1.0);

// Worker cap honoring the GJTRIG_THREADS environment variable.
int worker_count(int trials);

} // namespace gjtrig

#endif
