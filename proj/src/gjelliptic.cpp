#include "gjtrig/gjelliptic.hpp"

#include <functional>

namespace gjtrig {

GJModuli::GJModuli(double m1, double m2) : k1(m1), k2(m2) {
    if (!(k1 < 1.0 && k1 >= k2 && k2 >= 0.0))
        throw domain_error("moduli must satisfy 1 > k1 >= k2 >= 0");
    k1prime = std::sqrt((1.0 - k1) * (1.0 + k1));
    k2prime = std::sqrt((1.0 - k2) * (1.0 + k2));
    kappa = std::sqrt((k1 * k1 - k2 * k2) / (1.0 - k2 * k2));
}

GJQuad gj_eval_param(double u, double k1sq, double k2sq) {
    const double k2p2 = 1.0 - k2sq;
    if (k2p2 <= 0.0) throw domain_error("reduction requires k2^2 < 1");
    const double kap2 = (k1sq - k2sq) / k2p2;
    if (kap2 < -1e-15) throw domain_error("reduction requires k1^2 >= k2^2");
    const double k2p = std::sqrt(k2p2);

    GJQuad q;
    q.u = u;
    if (kap2 < 1e-15) {
        // equal moduli: the inner function degenerates to the circular one
        const double sn = std::sin(k2p * u), cn = std::cos(k2p * u);
        q.s = sn / std::sqrt(k2p2 + k2sq * sn * sn);
        q.c = k2p * cn / std::sqrt(1.0 - k2sq * cn * cn);
        q.d1 = q.d2 = std::sqrt(1.0 - k1sq * q.s * q.s);
        return q;
    }
    const JacobiTriple j = jacobi_param(k2p * u, kap2);
    q.s = j.sn / std::sqrt(k2p2 + k2sq * j.sn * j.sn);
    q.c = k2p * j.cn / std::sqrt(1.0 - k2sq * j.cn * j.cn);
    const double den = k1sq - k2sq * j.dn * j.dn;
    if (den <= 0.0) throw domain_error("reduction denominator vanished");
    const double root = std::sqrt((k1sq - k2sq) / den);
    q.d1 = root * j.dn;
    q.d2 = root;
    return q;
}

GJQuad gj_eval(double u, const GJModuli& m) { return gj_eval_param(u, m.k1 * m.k1, m.k2 * m.k2); }

namespace {

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa, double fb,
                        double fm, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double h = b - a;
    const double whole = h / 6.0 * (fa + 4.0 * fm + fb);
    const double left = h / 12.0 * (fa + 4.0 * flm + fm);
    const double right = h / 12.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0) throw integration_error("adaptive quadrature recursion exhausted");
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson(f, a, m, fa, fm, flm, tol / 2.0, depth - 1) +
           adaptive_simpson(f, m, b, fm, fb, frm, tol / 2.0, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    return adaptive_simpson(f, a, b, fa, fb, fm, tol, 48);
}

} // namespace

double gj_invert_s_param(double x, double k1sq, double k2sq) {
    if (x == 0.0) return 0.0;
    if (!(x > 0.0 && x < 1.0)) throw domain_error("inversion requires 0 <= x < 1");
    if (k1sq * x * x >= 1.0 || k2sq * x * x >= 1.0)
        throw domain_error("hyperelliptic radicand vanishes inside the range");
    // t = x sin(psi) absorbs the square-root endpoint at x -> 1
    auto f = [&](double psi) {
        const double t = x * std::sin(psi);
        const double t2 = t * t;
        return x * std::cos(psi) /
               std::sqrt((1.0 - t2) * (1.0 - k1sq * t2) * (1.0 - k2sq * t2));
    };
    return integrate(f, 0.0, pi / 2.0, 1e-12);
}

double gj_invert_s(double x, const GJModuli& m) {
    return gj_invert_s_param(x, m.k1 * m.k1, m.k2 * m.k2);
}

GJDerivativeResiduals gj_derivative_residuals(double u, const GJModuli& m) {
    const double h = 1e-5;
    const GJQuad p = gj_eval(u + h, m), q = gj_eval(u - h, m), c = gj_eval(u, m);
    GJDerivativeResiduals r;
    r.s = std::abs((p.s - q.s) / (2.0 * h) - c.c * c.d1 * c.d2);
    r.c = std::abs((p.c - q.c) / (2.0 * h) + c.s * c.d1 * c.d2);
    r.d1 = std::abs((p.d1 - q.d1) / (2.0 * h) + m.k1 * m.k1 * c.s * c.c * c.d2);
    r.d2 = std::abs((p.d2 - q.d2) / (2.0 * h) + m.k2 * m.k2 * c.s * c.c * c.d1);
    return r;
}

GJQuad gj_addition(double u, double v, int sign, const GJModuli& m) {
    if (sign != 1 && sign != -1) throw domain_error("sign must be +-1");
    const GJQuad a = gj_eval(u, m), b = gj_eval(v, m);
    const double sg = static_cast<double>(sign);
    const double kap2 = sq(m.kappa), k2p2 = sq(m.k2prime), k2sq = sq(m.k2);
    const double ns = a.s * a.d2 * b.c * b.d1 + sg * b.s * b.d2 * a.c * a.d1;
    const double nc = a.c * a.d2 * b.c * b.d2 - sg * k2p2 * a.s * a.d1 * b.s * b.d1;
    const double nd1 = a.d1 * a.d2 * b.d1 * b.d2 - sg * kap2 * k2p2 * a.s * a.c * b.s * b.c;
    const double nd2 = sq(a.d2) * sq(b.d2) - kap2 * sq(k2p2) * sq(a.s) * sq(b.s);
    const double den = std::sqrt(sq(nd2) + k2sq * sq(ns));
    if (den < 1e-14) throw degeneracy_error("addition denominator vanished");
    GJQuad out;
    out.u = u + sg * v;
    out.s = ns / den;
    out.c = nc / den;
    out.d1 = nd1 / den;
    out.d2 = nd2 / den;
    return out;
}

CurveResiduals curve_residuals(double u, const GJModuli& m) {
    const GJQuad q = gj_eval(u, m);
    const double x = q.s, y = q.c * q.d1 * q.d2;
    const double k1sq = sq(m.k1), k2sq = sq(m.k2);
    CurveResiduals r;
    r.curve = std::abs(y * y - (1.0 - x * x) * (1.0 - k1sq * x * x) * (1.0 - k2sq * x * x));
    const double w = x * y, z = x * x;
    r.cover = std::abs(w * w - z * (1.0 - z) * (1.0 - k1sq * z) * (1.0 - k2sq * z));
    return r;
}

} // namespace gjtrig
