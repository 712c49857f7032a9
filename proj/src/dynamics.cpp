#include "gjtrig/dynamics.hpp"

#include <algorithm>

namespace gjtrig {

double nambu3_bracket(const ScalarField& f, const ScalarField& g, const ScalarField& h,
                      const Eigen::Vector3d& x) {
    Eigen::Matrix3d j;
    j.row(0) = f.gradient(x).transpose();
    j.row(1) = g.gradient(x).transpose();
    j.row(2) = h.gradient(x).transpose();
    return j.determinant();
}

double nambu4_bracket(const ScalarField& f, const ScalarField& g, const ScalarField& h,
                      const ScalarField& i, const Eigen::Vector4d& x) {
    Eigen::Matrix4d j;
    j.row(0) = f.gradient(x).transpose();
    j.row(1) = g.gradient(x).transpose();
    j.row(2) = h.gradient(x).transpose();
    j.row(3) = i.gradient(x).transpose();
    return j.determinant();
}

// ---------------------------------------------------------------- 3D top --

Inertia3::Inertia3(double a, double b, double c) : i1(a), i2(b), i3(c) {
    if (!(0.0 < i1 && i1 < i2 && i2 < i3))
        throw domain_error("principal moments must satisfy 0 < I1 < I2 < I3");
}

Eigen::Vector3d euler3_rhs(const Eigen::Vector3d& m, const Inertia3& in) {
    return {(1.0 / in.i3 - 1.0 / in.i2) * m[1] * m[2],
            (1.0 / in.i1 - 1.0 / in.i3) * m[0] * m[2],
            (1.0 / in.i2 - 1.0 / in.i1) * m[0] * m[1]};
}

ScalarField euler3_energy(const Inertia3& in) {
    return {[in](const Eigen::VectorXd& m) {
                return 0.5 * (m[0] * m[0] / in.i1 + m[1] * m[1] / in.i2 + m[2] * m[2] / in.i3);
            },
            [in](const Eigen::VectorXd& m) {
                Eigen::VectorXd g(3);
                g << m[0] / in.i1, m[1] / in.i2, m[2] / in.i3;
                return g;
            }};
}

ScalarField euler3_momentum_sq() {
    return {[](const Eigen::VectorXd& m) { return 0.5 * m.squaredNorm(); },
            [](const Eigen::VectorXd& m) { return Eigen::VectorXd(m); }};
}

Euler3ClosedForm::Euler3ClosedForm(const Inertia3& in, const Eigen::Vector3d& m0, double t0) : t0_(t0) {
    if (std::abs(m0[0]) > 1e-12)
        throw domain_error("phase convention requires M1(t0) = 0");
    const double nu1 = 1.0 / in.i3 - 1.0 / in.i2;
    const double nu2 = 1.0 / in.i1 - 1.0 / in.i3;
    const double nu3 = 1.0 / in.i2 - 1.0 / in.i1;
    a2_ = m0[1];
    a3_ = m0[2];
    const double csq = -nu1 * nu2 * a3_ * a3_; // positive: nu1 < 0 < nu2
    c_ = std::sqrt(csq);
    if (c_ < 1e-14) {
        // spin about the intermediate axis: the oscillation degenerates
        if (std::abs(a2_) > 1e-12) throw domain_error("separatrix initial condition (M3 = 0)");
        a1_ = 0.0;
        m_ = 0.0;
        kappa_sq_ = 0.0;
        return;
    }
    a1_ = nu1 * a2_ * a3_ / c_;
    m_ = -nu1 * nu3 * a2_ * a2_ / csq; // k^2 <= 0
    kappa_sq_ = -m_ / (1.0 - m_);
    if (kappa_sq_ > 1.0 - 1e-10) throw domain_error("separatrix modulus (kappa^2 = 1)");
}

Eigen::Vector3d Euler3ClosedForm::operator()(double t) const {
    const JacobiTriple j = jacobi_param(c_ * (t - t0_), m_);
    return {a1_ * j.sn, a2_ * j.cn, a3_ * j.dn};
}

Eigen::Vector3d Euler3ClosedForm::derivative(double t) const {
    const JacobiTriple j = jacobi_param(c_ * (t - t0_), m_);
    return {a1_ * c_ * j.cn * j.dn, -a2_ * c_ * j.sn * j.dn, -a3_ * c_ * m_ * j.sn * j.cn};
}

// ---------------------------------------------------------------- 4D top --

Eigen::Vector4d nambu4_coefficients(const Nambu4Params& p) {
    Eigen::Vector4d c;
    for (int i = 0; i < 4; ++i) {
        Eigen::Matrix3d d;
        int col = 0;
        for (int v = 0; v < 4; ++v) {
            if (v == i) continue;
            d(0, col) = 1.0;
            d(1, col) = p.alpha[v];
            d(2, col) = p.beta[v];
            ++col;
        }
        const double sign = (i % 2 == 0) ? 1.0 : -1.0;
        c[i] = sign * d.determinant();
    }
    return c;
}

Eigen::Vector4d euler4_rhs(const Eigen::Vector4d& m, const Nambu4Params& p) {
    const Eigen::Vector4d c = nambu4_coefficients(p);
    return {c[0] * m[1] * m[2] * m[3], c[1] * m[0] * m[2] * m[3], c[2] * m[0] * m[1] * m[3],
            c[3] * m[0] * m[1] * m[2]};
}

ScalarField euler4_h1() { return euler4_weighted(Eigen::Vector4d::Ones()); }

ScalarField euler4_weighted(const Eigen::Vector4d& w) {
    return {[w](const Eigen::VectorXd& m) {
                double acc = 0.0;
                for (int i = 0; i < 4; ++i) acc += 0.5 * w[i] * m[i] * m[i];
                return acc;
            },
            [w](const Eigen::VectorXd& m) {
                Eigen::VectorXd g(4);
                for (int i = 0; i < 4; ++i) g[i] = w[i] * m[i];
                return g;
            }};
}

Eigen::Vector4d euler4_coefficients(const Eigen::Vector4d& a, double rate, double k1, double k2) {
    for (int i = 0; i < 4; ++i)
        if (std::abs(a[i]) < 1e-14) throw domain_error("zero amplitude");
    if (std::abs(rate) < 1e-14) throw domain_error("zero rate");
    return {a[0] * rate / (a[1] * a[2] * a[3]), -a[1] * rate / (a[0] * a[2] * a[3]),
            -k1 * k1 * a[2] * rate / (a[0] * a[1] * a[3]), -k2 * k2 * a[3] * rate / (a[0] * a[1] * a[2])};
}

Nambu4Params fit_nambu4_params(const Eigen::Vector4d& coefficients) {
    // For fixed alpha the image of beta |-> coefficients is the plane
    // orthogonal to both (1,1,1,1) and alpha, so alpha must itself be chosen
    // orthogonal to the ones vector and to the target.
    Nambu4Params p;
    const Eigen::Vector4d ones = Eigen::Vector4d::Ones();
    Eigen::Vector4d seed(1.0, 2.0, 4.0, 8.0);
    Eigen::Vector4d alpha = seed - seed.dot(ones) / 4.0 * ones;
    if (coefficients.norm() > 1e-14) {
        const Eigen::Vector4d c = coefficients / coefficients.norm();
        alpha -= alpha.dot(c) * c;
        if (alpha.norm() < 1e-8) {
            seed << 3.0, -1.0, 5.0, 2.0;
            alpha = seed - seed.dot(ones) / 4.0 * ones;
            alpha -= alpha.dot(c) * c;
        }
    }
    p.alpha = alpha;
    Eigen::Matrix4d jac;
    for (int b = 0; b < 4; ++b) {
        Nambu4Params probe{p.alpha, Eigen::Vector4d::Unit(b)};
        jac.col(b) = nambu4_coefficients(probe); // coefficients are linear in beta
    }
    p.beta = jac.bdcSvd(Eigen::ComputeFullU | Eigen::ComputeFullV).solve(coefficients);
    return p;
}

Eigen::Vector4d Euler4ClosedForm::operator()(double t) const {
    const GJQuad q = gj_eval_param(rate * (t - t0), k1 * k1, k2 * k2);
    return {amplitudes[0] * q.s, amplitudes[1] * q.c, amplitudes[2] * q.d1, amplitudes[3] * q.d2};
}

// ------------------------------------------------------------- integrator --

double Trajectory::max_conserved_drift() const {
    if (conserved.empty()) return 0.0;
    double drift = 0.0;
    for (std::size_t q = 0; q < conserved.front().size(); ++q) {
        const double base = conserved.front()[q];
        for (const auto& row : conserved) drift = std::max(drift, std::abs(row[q] - base));
    }
    return drift;
}

Trajectory integrate(const std::function<Eigen::VectorXd(double, const Eigen::VectorXd&)>& rhs,
                     const Eigen::VectorXd& y0, double t0, double t1, double rel_tol,
                     const std::vector<double>& sample_times,
                     const std::vector<std::function<double(const Eigen::VectorXd&)>>& conserved,
                     double max_step) {
    if (rel_tol < 1e-12) throw domain_error("relative tolerance below 1e-12");
    if (t1 <= t0) throw domain_error("integration span must be forward");

    // Dormand-Prince 5(4) pair
    static const double a21 = 1.0 / 5;
    static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                        a54 = -212.0 / 729;
    static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                        a65 = -5103.0 / 18656;
    static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                        b6 = 11.0 / 84;
    static const double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                        e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                        e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

    Trajectory out;
    std::vector<double> samples = sample_times;
    std::sort(samples.begin(), samples.end());
    std::size_t next_sample = 0;
    while (next_sample < samples.size() && samples[next_sample] < t0 - 1e-14) ++next_sample;

    const double atol = 1e-13;
    double t = t0;
    Eigen::VectorXd y = y0;
    Eigen::VectorXd f = rhs(t, y);
    double h = std::min(max_step, (t1 - t0) / 100.0);

    auto emit = [&](double ts, const Eigen::VectorXd& ys) {
        out.times.push_back(ts);
        out.states.push_back(ys);
        if (!conserved.empty()) {
            std::vector<double> row;
            row.reserve(conserved.size());
            for (const auto& q : conserved) row.push_back(q(ys));
            out.conserved.push_back(row);
        }
    };
    if (next_sample < samples.size() && std::abs(samples[next_sample] - t0) <= 1e-14) {
        emit(t0, y0);
        ++next_sample;
    }

    const int max_steps = 50'000'000;
    const double t_eps = 1e-12 * std::max(1.0, std::abs(t1));
    for (int step = 0; step < max_steps && t < t1 - t_eps; ++step) {
        if (h < 1e-13 * std::max(1.0, std::abs(t))) throw integration_error("step size underflow (stiffness)");
        h = std::min(h, max_step);
        if (t + h > t1) h = t1 - t; // land on the end time exactly

        const Eigen::VectorXd k1 = f;
        const Eigen::VectorXd k2 = rhs(t + h / 5.0, y + h * (a21 * k1));
        const Eigen::VectorXd k3 = rhs(t + 3.0 * h / 10.0, y + h * (a31 * k1 + a32 * k2));
        const Eigen::VectorXd k4 = rhs(t + 4.0 * h / 5.0, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
        const Eigen::VectorXd k5 = rhs(t + 8.0 * h / 9.0, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        const Eigen::VectorXd k6 = rhs(t + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        const Eigen::VectorXd y1 = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        const Eigen::VectorXd k7 = rhs(t + h, y1);
        const Eigen::VectorXd err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

        double norm = 0.0;
        for (Eigen::Index i = 0; i < y.size(); ++i) {
            const double sc = atol + rel_tol * std::max(std::abs(y[i]), std::abs(y1[i]));
            norm += sq(err[i] / sc);
        }
        norm = std::sqrt(norm / static_cast<double>(y.size()));

        if (norm <= 1.0) {
            // cubic Hermite over the accepted step serves the sample times
            while (next_sample < samples.size() && samples[next_sample] <= t + h + 1e-14) {
                const double ts = std::min(samples[next_sample], t + h);
                const double s = (ts - t) / h;
                const double h00 = (1.0 + 2.0 * s) * sq(1.0 - s), h10 = s * sq(1.0 - s);
                const double h01 = sq(s) * (3.0 - 2.0 * s), h11 = sq(s) * (s - 1.0);
                emit(ts, h00 * y + (h10 * h) * k1 + h01 * y1 + (h11 * h) * k7);
                ++next_sample;
            }
            t += h;
            y = y1;
            f = k7; // first-same-as-last
        }
        const double factor = std::clamp(0.9 * std::pow(std::max(norm, 1e-10), -0.2), 0.2, 5.0);
        h *= factor;
    }
    if (t < t1 - t_eps) throw integration_error("integrator failed to reach the end time");
    // serve any samples at the end point that were not emitted by a step
    while (next_sample < samples.size() && samples[next_sample] <= t1 + 1e-14) {
        emit(samples[next_sample], y);
        ++next_sample;
    }
    return out;
}

// ------------------------------------------------------------------ DELL --

DELLParams::DELLParams(double coupling, double base_modulus) : g(coupling), ktilde(base_modulus) {
    if (!(ktilde > 0.0 && ktilde < 1.0)) throw domain_error("base modulus must lie in (0,1)");
}

AlphaValue alpha_profile(double q, const DELLParams& p, AlphaProfile profile) {
    if (profile == AlphaProfile::rational) {
        const double a2 = 1.0 - 2.0 * p.g * p.g / (q * q);
        if (a2 < 0.0) throw domain_error("alpha^2 negative: |Q| below sqrt(2) g");
        const double a = std::sqrt(a2);
        const double da = a > 1e-14 ? 2.0 * p.g * p.g / (q * q * q * a) : 0.0;
        return {a, da};
    }
    const JacobiTriple j = jacobi(q, p.ktilde);
    return {1.0 - 2.0 * p.g * p.g * j.cn * j.cn, 4.0 * p.g * p.g * j.sn * j.cn * j.dn};
}

DellHamiltonianForms dell_hamiltonian(double p_mom, double q_pos, const DELLParams& p, AlphaProfile profile) {
    const double k = p.ktilde;
    const AlphaValue av = alpha_profile(q_pos, p, profile);
    const double a2 = av.alpha * av.alpha;
    const double kp2 = 1.0 - k * k;
    DellHamiltonianForms out{};
    const double scale = std::sqrt(kp2 + k * k * a2);
    out.cn_form = av.alpha * jacobi(p_mom * scale, std::min(k * av.alpha / scale, 1.0 - 1e-15)).cn;
    const double k2 = k * std::sqrt(std::max(0.0, 1.0 - a2));
    const GJQuad gq = gj_eval_param(p_mom, k * k, k2 * k2);
    out.gj_form = av.alpha * gq.c / gq.d2;
    return out;
}

Eigen::Vector2d dell_hamilton_rhs(double p_mom, double q_pos, const DELLParams& p, AlphaProfile profile) {
    const double k = p.ktilde;
    const AlphaValue av = alpha_profile(q_pos, p, profile);
    const double a = av.alpha, da = av.dalpha;
    const double k2sq = k * k * (1.0 - a * a);
    const double k2p2 = 1.0 - k2sq;
    const double k2p = std::sqrt(k2p2);

    const GJQuad q = gj_eval_param(p_mom, k * k, k2sq);
    // dH/dP = alpha * d(c/d2)/dP = -alpha (1 - k2^2) s d1 / d2^2
    const double dHdP = -a * k2p2 * q.s * q.d1 / sq(q.d2);

    // dH/dQ = alpha' c/d2 + alpha * d/dQ cn(k2' P; kappa), with
    // kappa^2 = k^2 alpha^2 / k2'^2 and both arguments moved by k2(Q).
    const double kap2 = k * k * a * a / k2p2;
    const double w = k2p * p_mom;
    const double dk2sq_dq = -2.0 * k * k * a * da;
    const double dk2p_dq = -dk2sq_dq / (2.0 * k2p);
    const double kprime2 = 1.0 - k * k;
    const double dkap2_dq = 2.0 * k * k * a * da * kprime2 / sq(k2p2);

    const JacobiTriple jw = jacobi_param(w, kap2);
    const double dcn_dw = -jw.sn * jw.dn;
    // modulus-square derivative of cn by centered 4th-order differences
    const double hm = 1e-4 * std::max(0.1, kap2);
    auto cn_at = [&](double m2) { return jacobi_param(w, m2).cn; };
    const double dcn_dm = (-cn_at(kap2 + 2 * hm) + 8 * cn_at(kap2 + hm) - 8 * cn_at(kap2 - hm) +
                           cn_at(kap2 - 2 * hm)) /
                          (12 * hm);
    const double dHdQ = da * (q.c / q.d2) + a * (dcn_dw * p_mom * dk2p_dq + dcn_dm * dkap2_dq);

    return {-dHdQ, dHdP};
}

Vector4cd dell_quadric_values(const Vector6cd& x, const DELLParams& p) {
    const std::complex<double> g2 = p.g * p.g;
    Vector4cd q;
    q[0] = x[0] * x[0] - x[1] * x[1];
    q[1] = x[0] * x[0] - x[2] * x[2];
    q[2] = -g2 * x[0] * x[0] + x[3] * x[3] + x[4] * x[4];
    q[3] = -g2 * x[0] * x[0] + x[3] * x[3] + x[5] * x[5] / (p.ktilde * p.ktilde);
    return q;
}

Vector6cd dell_quadric_rhs(const Vector6cd& x, const DELLParams& p, const Vector4cd& leaf, double surface_tol) {
    const Vector4cd q = dell_quadric_values(x, p);
    for (int i = 0; i < 4; ++i)
        if (std::abs(q[i] - leaf[i]) > surface_tol)
            throw domain_error("state left the quadric surfaces");
    Vector6cd dx;
    dx[0] = x[1] * x[2] * x[3] * x[5];
    dx[1] = x[0] * x[2] * x[3] * x[5];
    dx[2] = x[0] * x[1] * x[3] * x[5];
    dx[3] = (p.g * p.g) * x[0] * x[1] * x[2] * x[5];
    dx[4] = 0.0;
    dx[5] = 0.0;
    return dx;
}

DellClosedForm::DellClosedForm(const DELLParams& p, double energy, double t0)
    : params_(p), energy_(energy), t0_(t0) {
    const double ksq = 1.0 - p.ktilde * p.ktilde * (1.0 - energy * energy);
    if (ksq < 1e-10) throw domain_error("energy violates the rate relation");
    rate_ = std::sqrt(ksq);
    const std::complex<double> sg = std::sqrt(std::complex<double>(-p.g * p.g, 0.0)); // i |g|
    const std::complex<double> k1c(p.k1(), 0.0);
    const std::complex<double> k2c = std::sqrt(std::complex<double>(p.k2_sq(), 0.0));
    const Vector4cd asq{k1c * k2c / sg, -k1c * k2c / sg, -k2c / (k1c * sg), k1c * sg / k2c};
    a_[1] = std::sqrt(asq[1]);
    a_[2] = std::sqrt(asq[2]);
    a_[3] = std::sqrt(asq[3]);
    a_[0] = a_[1] * a_[2] * a_[3]; // matches asq[0] up to the branch choice
}

Vector6cd DellClosedForm::operator()(double t) const {
    const GJQuad q = gj_eval_param(rate_ * (t - t0_), sq(params_.k1()), params_.k2_sq());
    Vector6cd x;
    x[0] = a_[0] * q.s;
    x[1] = a_[1] * q.c;
    x[2] = a_[2] * q.d1;
    x[3] = a_[3] * q.d2;
    x[4] = energy_;
    x[5] = rate_;
    return x;
}

} // namespace gjtrig
