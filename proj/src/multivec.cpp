#include "gjtrig/multivec.hpp"

namespace gjtrig {

double det(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols())
        throw dimension_error("det: matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    if (m.rows() < 1 || m.rows() > max_dim)
        throw dimension_error("det: dimension " + std::to_string(m.rows()) + " out of range");
    return m.determinant();
}

static Eigen::MatrixXd as_columns(const std::vector<Eigen::VectorXd>& vs) {
    if (vs.empty()) throw dimension_error("empty vector list");
    Eigen::MatrixXd m(vs.front().size(), static_cast<Eigen::Index>(vs.size()));
    for (std::size_t c = 0; c < vs.size(); ++c) {
        if (vs[c].size() != m.rows()) throw dimension_error("mixed vector dimensions");
        m.col(static_cast<Eigen::Index>(c)) = vs[c];
    }
    return m;
}

Eigen::VectorXd cross_nd(const Eigen::MatrixXd& vs) {
    const Eigen::Index n = vs.rows();
    if (n < 3 || n > max_dim) throw dimension_error("cross_nd: dimension " + std::to_string(n) + " out of range");
    if (vs.cols() != n - 1)
        throw dimension_error("cross_nd: need n-1 vectors, got " + std::to_string(vs.cols()));

    // r_i = det(v_1,..,v_{n-1}, e_i): Laplace expansion along the appended
    // column, so r_i = (-1)^{i+n} * det(rows != i of vs).
    Eigen::VectorXd r(n);
    Eigen::MatrixXd minor(n - 1, n - 1);
    for (Eigen::Index i = 0; i < n; ++i) {
        Eigen::Index rr = 0;
        for (Eigen::Index k = 0; k < n; ++k) {
            if (k == i) continue;
            minor.row(rr++) = vs.row(k);
        }
        const double sign = ((i + n) % 2 == 0) ? -1.0 : 1.0; // cofactor of row i+1, column n
        r[i] = sign * minor.determinant();
    }
    return r;
}

Eigen::VectorXd cross_nd(const std::vector<Eigen::VectorXd>& vs) {
    return cross_nd(as_columns(vs));
}

double nested_identity_residual(const std::vector<Eigen::VectorXd>& vs) {
    if (vs.empty()) throw dimension_error("empty vector list");
    const Eigen::Index dim = vs.front().size();
    const Eigen::Index n = dim - 1;                  // vectors live in R^{n+1}
    if (n < 2 || n > 5) throw dimension_error("nested identity: dimension out of range");
    if (static_cast<Eigen::Index>(vs.size()) != 2 * n - 1)
        throw dimension_error("nested identity: need 2n-1 vectors");
    for (const auto& v : vs)
        if (v.size() != dim) throw dimension_error("mixed vector dimensions");

    // left side: fold the (n)-ary product through the remaining vectors
    Eigen::MatrixXd inner(dim, n);
    for (Eigen::Index c = 0; c < n; ++c) inner.col(c) = vs[static_cast<std::size_t>(c)];
    Eigen::MatrixXd outer(dim, n);
    outer.col(0) = cross_nd(inner);
    for (Eigen::Index c = 1; c < n; ++c) outer.col(c) = vs[static_cast<std::size_t>(n - 1 + c)];
    const Eigen::VectorXd lhs = cross_nd(outer);

    // right side: minus the bordered determinant, expanded along the vector row
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(dim);
    Eigen::MatrixXd dots(n - 1, n);
    for (Eigen::Index r = 0; r < n - 1; ++r)
        for (Eigen::Index c = 0; c < n; ++c)
            dots(r, c) = vs[static_cast<std::size_t>(n + r)].dot(vs[static_cast<std::size_t>(c)]);
    Eigen::MatrixXd sub(n - 1, n - 1);
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index cc = 0;
        for (Eigen::Index k = 0; k < n; ++k) {
            if (k == c) continue;
            sub.col(cc++) = dots.col(k);
        }
        const double sign = (c % 2 == 0) ? 1.0 : -1.0;   // (-1)^{1+(c+1)}
        rhs -= sign * sub.determinant() * vs[static_cast<std::size_t>(c)];
    }
    return (lhs - rhs).lpNorm<Eigen::Infinity>();
}

double plucker_residual(const std::vector<Eigen::VectorXd>& vs) {
    if (vs.empty()) throw dimension_error("empty vector list");
    const Eigen::Index d = vs.front().size();        // d = n-1
    const Eigen::Index n = d + 1;
    if (n < 3 || n > 7) throw dimension_error("plucker: dimension out of range");
    if (static_cast<Eigen::Index>(vs.size()) != 2 * n - 2)
        throw dimension_error("plucker: need 2n-2 vectors");
    for (const auto& v : vs)
        if (v.size() != d) throw dimension_error("mixed vector dimensions");

    auto det_of = [&](const std::vector<Eigen::Index>& idx) {
        Eigen::MatrixXd m(d, d);
        for (Eigen::Index c = 0; c < d; ++c) m.col(c) = vs[static_cast<std::size_t>(idx[static_cast<std::size_t>(c)])];
        return m.determinant();
    };

    double acc = 0.0;
    for (Eigen::Index t = 0; t < n; ++t) {
        std::vector<Eigen::Index> first{t};
        for (Eigen::Index k = n; k < 2 * n - 2; ++k) first.push_back(k);
        std::vector<Eigen::Index> second;
        for (Eigen::Index k = 0; k < n; ++k)
            if (k != t) second.push_back(k);
        const double sign = (t % 2 == 0) ? 1.0 : -1.0;
        acc += sign * det_of(first) * det_of(second);
    }
    return std::abs(acc);
}

double five_vector_identity_residual(const Eigen::Vector4d& a, const Eigen::Vector4d& b,
                                     const Eigen::Vector4d& c, const Eigen::Vector4d& d,
                                     const Eigen::Vector4d& e) {
    auto x3 = [](const Eigen::VectorXd& p, const Eigen::VectorXd& q, const Eigen::VectorXd& r) {
        Eigen::MatrixXd m(4, 3);
        m.col(0) = p; m.col(1) = q; m.col(2) = r;
        return cross_nd(m);
    };
    const Eigen::VectorXd lhs = x3(x3(a, b, c), d, e) + x3(x3(a, b, d), e, c) + x3(x3(a, b, e), c, d);
    const Eigen::VectorXd rhs = x3(a, b, x3(c, d, e));
    return (lhs - rhs).lpNorm<Eigen::Infinity>();
}

double norm_scale(const Eigen::MatrixXd& vs) {
    double s = 1.0;
    for (Eigen::Index c = 0; c < vs.cols(); ++c) s *= vs.col(c).norm();
    return s;
}

} // namespace gjtrig
