#ifndef GJTRIG_COMMON_HPP
#define GJTRIG_COMMON_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace gjtrig {

// Error hierarchy. All preconditions throw; numerical near-misses inside
// documented tolerances are clamped instead (see clamp_unit).
struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};
struct degeneracy_error : domain_error {
    using domain_error::domain_error;
};
struct sampling_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct integration_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr double pi = 3.14159265358979323846;

// Clamp an inverse-trig argument to [-1,1].  Values further than `slack`
// outside the interval indicate a non-realizable configuration, not rounding.
inline double clamp_unit(double x, double slack = 1e-9) {
    if (x > 1.0) {
        if (x > 1.0 + slack) throw degeneracy_error("inverse-trig argument " + std::to_string(x) + " exceeds 1");
        return 1.0;
    }
    if (x < -1.0) {
        if (x < -1.0 - slack) throw degeneracy_error("inverse-trig argument " + std::to_string(x) + " below -1");
        return -1.0;
    }
    return x;
}

inline double sq(double x) { return x * x; }

} // namespace gjtrig

#endif
