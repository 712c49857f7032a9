#ifndef GJTRIG_DYNAMICS_HPP
#define GJTRIG_DYNAMICS_HPP

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "gjtrig/elliptic.hpp"
#include "gjtrig/gjelliptic.hpp"

namespace gjtrig {

using Vector6cd = Eigen::Matrix<std::complex<double>, 6, 1>;
using Vector4cd = Eigen::Matrix<std::complex<double>, 4, 1>;

// A differentiable scalar field with a caller-supplied analytic gradient.
struct ScalarField {
    std::function<double(const Eigen::VectorXd&)> value;
    std::function<Eigen::VectorXd(const Eigen::VectorXd&)> gradient;
};

// Jacobian-determinant brackets of three / four fields.
double nambu3_bracket(const ScalarField& f, const ScalarField& g, const ScalarField& h,
                      const Eigen::Vector3d& x);
double nambu4_bracket(const ScalarField& f, const ScalarField& g, const ScalarField& h,
                      const ScalarField& i, const Eigen::Vector4d& x);

// ---------------------------------------------------------------- 3D top --

struct Inertia3 {
    double i1, i2, i3; // strictly increasing, positive
    Inertia3(double a, double b, double c);
};

Eigen::Vector3d euler3_rhs(const Eigen::Vector3d& m, const Inertia3& inertia);

// Energy and squared-momentum fields (with the conventional 1/2 factors).
ScalarField euler3_energy(const Inertia3& inertia);
ScalarField euler3_momentum_sq();

// Closed-form free top with the zero phase placed on the first component:
//   M = (A1 sn, A2 cn, A3 dn)(c (t - t0))  at parameter m = k^2 < 0.
// Amplitudes and rate come from the conserved quantities; the parameter is
// fixed by the equations of motion.  The real-modulus functions reached
// through the imaginary-modulus transformation carry
//   kappa^2 = (I2-I1)(2 H1 I3 - |M|^2) / ((I3-I2)(|M|^2 - 2 H1 I1)).
class Euler3ClosedForm {
  public:
    Euler3ClosedForm(const Inertia3& inertia, const Eigen::Vector3d& m0, double t0);
    Eigen::Vector3d operator()(double t) const;
    Eigen::Vector3d derivative(double t) const;
    double parameter() const { return m_; }          // k^2 (negative)
    double kappa_sq() const { return kappa_sq_; }    // modulus^2 after transformation
    double rate() const { return c_; }

  private:
    double a1_, a2_, a3_, c_, m_, kappa_sq_, t0_;
};

// ---------------------------------------------------------------- 4D top --

struct Nambu4Params {
    Eigen::Vector4d alpha;
    Eigen::Vector4d beta;
};

// The four cubic coefficients of the Nambu flow; they always sum to zero.
Eigen::Vector4d nambu4_coefficients(const Nambu4Params& p);
Eigen::Vector4d euler4_rhs(const Eigen::Vector4d& m, const Nambu4Params& p);

ScalarField euler4_h1();
ScalarField euler4_weighted(const Eigen::Vector4d& w); // 1/2 sum w_i M_i^2

// Coefficients for which (A1 s, A2 c, A3 d1, A4 d2)(K (t-t0)) solves
// dM_i/dt = c_i * (product of the other components).
Eigen::Vector4d euler4_coefficients(const Eigen::Vector4d& amplitudes, double rate, double k1, double k2);

// Least-squares (alpha, beta) reproducing a coefficient vector; exact when
// the coefficients sum to zero.
Nambu4Params fit_nambu4_params(const Eigen::Vector4d& coefficients);

struct Euler4ClosedForm {
    Eigen::Vector4d amplitudes;
    double rate, k1, k2, t0;
    Eigen::Vector4d operator()(double t) const;
};

// ------------------------------------------------------------- integrator --

struct Trajectory {
    std::vector<double> times;
    std::vector<Eigen::VectorXd> states;
    std::vector<std::vector<double>> conserved; // one row per sample
    double max_conserved_drift() const;
};

// Adaptive Dormand-Prince 5(4) with cubic-Hermite dense output at the
// requested sample times.  `max_step` bounds the step so the interpolant
// stays well inside the integration tolerance.
Trajectory integrate(const std::function<Eigen::VectorXd(double, const Eigen::VectorXd&)>& rhs,
                     const Eigen::VectorXd& y0, double t0, double t1, double rel_tol,
                     const std::vector<double>& sample_times,
                     const std::vector<std::function<double(const Eigen::VectorXd&)>>& conserved = {},
                     double max_step = 1e-2);

// ------------------------------------------------------------------ DELL --

struct DELLParams {
    double g;      // coupling
    double ktilde; // base modulus in (0,1)
    DELLParams(double coupling, double base_modulus);
    double k1() const { return 1.0 / ktilde; }
    double k2_sq() const { return -2.0 * g * g * ktilde * ktilde; } // negative for real g
};

enum class AlphaProfile { rational, elliptic };

// alpha(Q) and its derivative for the two coupling profiles.  The rational
// profile is alpha^2 = 1 - 2 g^2/Q^2; the elliptic one integrates the
// printed derivative 4 g^2 sn cn dn to alpha = 1 - 2 g^2 cn^2(Q).
struct AlphaValue {
    double alpha, dalpha;
};
AlphaValue alpha_profile(double q, const DELLParams& p, AlphaProfile profile);

struct DellHamiltonianForms {
    double cn_form;  // single-modulus expression
    double gj_form;  // alpha(Q) c(P)/d2(P) at k1 = k, k2 = k sqrt(1-alpha^2)
    double mismatch() const { return std::abs(cn_form - gj_form); }
};
// Both Hamiltonian forms at momentum P, position Q; the Hamiltonian modulus
// is the base modulus of `p`.  Requires alpha^2(Q) >= 0.
DellHamiltonianForms dell_hamiltonian(double p_mom, double q_pos, const DELLParams& p,
                                      AlphaProfile profile = AlphaProfile::rational);

// Hamilton equations (dP/dt, dQ/dt); dH/dP is analytic, dH/dQ follows the
// chain rule through the Q-dependent second modulus.
Eigen::Vector2d dell_hamilton_rhs(double p_mom, double q_pos, const DELLParams& p,
                                  AlphaProfile profile = AlphaProfile::rational);

// Casimir values of the four quadrics at a phase-space point.
Vector4cd dell_quadric_values(const Vector6cd& x, const DELLParams& p);

// Quadric flow with x5 as the Hamiltonian.  The leaf is pinned by the
// Casimir values `leaf`; states further than `surface_tol` from it are
// rejected.
Vector6cd dell_quadric_rhs(const Vector6cd& x, const DELLParams& p, const Vector4cd& leaf,
                           double surface_tol = 1e-6);

// Closed-form quadric orbit: x = (A1 s, A2 c, A3 d1, A4 d2)(K (t-t0)), with
// x5 = E and x6 = K tied by ktilde^2 (1 - E^2) = 1 - K^2.
class DellClosedForm {
  public:
    DellClosedForm(const DELLParams& p, double energy, double t0);
    Vector6cd operator()(double t) const;
    const Vector4cd& amplitudes() const { return a_; }
    double rate() const { return rate_; }

  private:
    DELLParams params_;
    Vector4cd a_;
    double energy_, rate_, t0_;
};

} // namespace gjtrig

#endif
