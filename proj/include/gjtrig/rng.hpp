#ifndef GJTRIG_RNG_HPP
#define GJTRIG_RNG_HPP

#include <cstdint>
#include <cmath>

#include <Eigen/Dense>

namespace gjtrig {

// Counter-based splitmix64.  Self-contained so that streams are identical
// across platforms and standard libraries; trial seeds are derived from a
// master seed by mixing the trial counter.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1)
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // uniform in [a,b)
    double uniform(double a, double b) { return a + (b - a) * next_double(); }

    // standard normal via Box-Muller (no cached second value, so the stream
    // position is a pure function of the call count)
    double normal() {
        double u1 = next_double(), u2 = next_double();
        while (u1 <= 0.0) u1 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    Eigen::VectorXd unit_vector(int dim) {
        Eigen::VectorXd v(dim);
        do {
            for (int i = 0; i < dim; ++i) v[i] = normal();
        } while (v.norm() < 1e-8);
        v.normalize();
        return v;
    }

    static std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) {
        SplitMix64 s(master ^ (0x9e3779b97f4a7c15ULL * (trial + 1)));
        return s.next_u64();
    }

  private:
    std::uint64_t state_;
};

} // namespace gjtrig

#endif
