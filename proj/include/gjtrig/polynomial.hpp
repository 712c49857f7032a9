#ifndef GJTRIG_POLYNOMIAL_HPP
#define GJTRIG_POLYNOMIAL_HPP

#include <array>
#include <map>

#include "gjtrig/dynamics.hpp"

namespace gjtrig {

// Dense multivariate polynomial over N variables.  Small and exact; used to
// evaluate nested brackets without numerical differentiation.
template <int N>
class Polynomial {
  public:
    using Expo = std::array<int, N>;

    Polynomial() = default;

    static Polynomial constant(double c) {
        Polynomial p;
        if (c != 0.0) p.terms_[Expo{}] = c;
        return p;
    }
    static Polynomial variable(int i) {
        Polynomial p;
        Expo e{};
        e[static_cast<std::size_t>(i)] = 1;
        p.terms_[e] = 1.0;
        return p;
    }

    Polynomial operator+(const Polynomial& o) const {
        Polynomial out = *this;
        for (const auto& [e, c] : o.terms_) out.terms_[e] += c;
        return out;
    }
    Polynomial operator-(const Polynomial& o) const { return *this + o * -1.0; }
    Polynomial operator*(double s) const {
        Polynomial out;
        if (s == 0.0) return out;
        for (const auto& [e, c] : terms_) out.terms_[e] = c * s;
        return out;
    }
    Polynomial operator*(const Polynomial& o) const {
        Polynomial out;
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : o.terms_) {
                Expo e;
                for (int i = 0; i < N; ++i)
                    e[static_cast<std::size_t>(i)] = ea[static_cast<std::size_t>(i)] + eb[static_cast<std::size_t>(i)];
                out.terms_[e] += ca * cb;
            }
        return out;
    }

    Polynomial derivative(int i) const {
        Polynomial out;
        for (const auto& [e, c] : terms_) {
            const int p = e[static_cast<std::size_t>(i)];
            if (p == 0) continue;
            Expo d = e;
            d[static_cast<std::size_t>(i)] = p - 1;
            out.terms_[d] += c * p;
        }
        return out;
    }

    double eval(const Eigen::VectorXd& x) const {
        double acc = 0.0;
        for (const auto& [e, c] : terms_) {
            double t = c;
            for (int i = 0; i < N; ++i)
                for (int p = 0; p < e[static_cast<std::size_t>(i)]; ++p) t *= x[i];
            acc += t;
        }
        return acc;
    }

    ScalarField field() const {
        std::array<Polynomial, N> grads;
        for (int i = 0; i < N; ++i) grads[static_cast<std::size_t>(i)] = derivative(i);
        Polynomial self = *this;
        return {[self](const Eigen::VectorXd& x) { return self.eval(x); },
                [grads](const Eigen::VectorXd& x) {
                    Eigen::VectorXd g(N);
                    for (int i = 0; i < N; ++i) g[i] = grads[static_cast<std::size_t>(i)].eval(x);
                    return g;
                }};
    }

    // Jacobian-determinant bracket, kept polynomial so nested brackets have
    // exact gradients.
    static Polynomial bracket(const std::array<Polynomial, N>& fs) {
        std::array<std::array<Polynomial, N>, N> jac;
        for (int r = 0; r < N; ++r)
            for (int c = 0; c < N; ++c)
                jac[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = fs[static_cast<std::size_t>(r)].derivative(c);
        return det(jac);
    }

  private:
    template <std::size_t M>
    static Polynomial det(const std::array<std::array<Polynomial, M>, M>& a, std::size_t size = M) {
        if (size == 1) return a[0][0];
        Polynomial acc;
        // Laplace expansion along the first row of the leading size x size block
        for (std::size_t c = 0; c < size; ++c) {
            std::array<std::array<Polynomial, M>, M> sub{};
            for (std::size_t r = 1; r < size; ++r) {
                std::size_t cc = 0;
                for (std::size_t k = 0; k < size; ++k) {
                    if (k == c) continue;
                    sub[r - 1][cc++] = a[r][k];
                }
            }
            const double sign = (c % 2 == 0) ? 1.0 : -1.0;
            acc = acc + a[0][c] * det(sub, size - 1) * sign;
        }
        return acc;
    }

    std::map<Expo, double> terms_;
};

} // namespace gjtrig

#endif
