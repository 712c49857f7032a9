#include <doctest.h>

#include "gjtrig/hyperspherical.hpp"
#include "gjtrig/mdim.hpp"
#include "gjtrig/multivec.hpp"
#include "gjtrig/rng.hpp"

using namespace gjtrig;

namespace {
Eigen::VectorXd facet_normal(const std::vector<Eigen::VectorXd>& ns, const std::vector<int>& idx) {
    std::vector<Eigen::VectorXd> sel;
    for (int i : idx) sel.push_back(ns[static_cast<std::size_t>(i)]);
    Eigen::VectorXd v = cross_nd(sel);
    return v / v.norm();
}
} // namespace

TEST_CASE("cosine rule reductions") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const GramMatrix g3 = sample_triangle_gram(seed);
        CHECK(std::abs(mdim_cosine_rule(g3, {0, 1, 2}) -
                       spherical_cosine_rule(g3.angle(0, 1), g3.angle(0, 2), g3.angle(1, 2))) < 1e-12);
        const GramMatrix g4 = sample_tetrahedron_gram(seed);
        CHECK(std::abs(mdim_cosine_rule(g4, {0, 1, 2, 3}) - hyp_cosine_rule(g4, 0, 1, 2, 3)) < 1e-12);
    }
}

TEST_CASE("cosine rule vs normals, m = 5 and 6") {
    for (int m : {5, 6})
        for (std::uint64_t seed = 1; seed <= 25; ++seed) {
            const GramMatrix g = sample_simplex_gram(m, seed);
            const auto ns = g.realize();
            std::vector<int> first, second, ordered;
            for (int i = 0; i < m; ++i) ordered.push_back(i);
            for (int i = 0; i + 1 < m; ++i) first.push_back(i);
            for (int i = 1; i < m; ++i) second.push_back(i);
            const double oracle = -facet_normal(ns, first).dot(facet_normal(ns, second));
            CHECK(std::abs(mdim_cosine_rule_cos(g, ordered) - oracle) < 1e-9);
        }
}

TEST_CASE("sine constant") {
    // orthogonal configuration: every generalized sine is 1
    Eigen::MatrixXd id = Eigen::MatrixXd::Identity(5, 5);
    CHECK(mdim_sine_constant(GramMatrix(id)) == doctest::Approx(1.0));

    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const GramMatrix g3 = sample_triangle_gram(seed);
        CHECK(std::abs(mdim_sine_constant(g3) -
                       spherical_sine_constant(g3.angle(0, 1), g3.angle(0, 2), g3.angle(1, 2))) < 1e-12);

        // m = 5 cross-product oracle
        const int m = 5;
        const GramMatrix g = sample_simplex_gram(m, seed);
        const auto ns = g.realize();
        std::vector<Eigen::VectorXd> us;
        for (int r = 0; r + 1 < m; ++r) {
            std::vector<int> facet;
            for (int t = 0; t + 1 < m; ++t) facet.push_back((r + t) % m);
            us.push_back(facet_normal(ns, facet));
        }
        std::vector<int> last;
        for (int t = 0; t + 1 < m; ++t) last.push_back((m - 1 + t) % m);
        std::sort(last.begin(), last.end());
        const double oracle = cross_nd(us).norm() / g.gsin(last);
        CHECK(std::abs(mdim_sine_constant(g) - oracle) < 1e-8);
    }
}

TEST_CASE("polar cosine residual") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        CHECK(mdim_polar_cosine_residual(sample_triangle_gram(seed)) < 1e-10);
        CHECK(mdim_polar_cosine_residual(sample_tetrahedron_gram(seed)) < 1e-8);
        CHECK(mdim_polar_cosine_residual(sample_simplex_gram(5, seed)) < 1e-8);
        CHECK(mdim_polar_cosine_residual(sample_simplex_gram(6, seed)) < 1e-8);
    }
}

TEST_CASE("facet hierarchy") {
    // orthogonal configuration: the link constant is 1 and both sines agree
    Eigen::MatrixXd id = Eigen::MatrixXd::Identity(5, 5);
    for (int j = 2; j < 5; ++j) CHECK(facet_hierarchy_residual(GramMatrix(id), j) < 1e-12);

    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        for (int m : {4, 5, 6}) {
            const GramMatrix g = sample_simplex_gram(m, seed);
            for (int j = 2; j < m; ++j) CHECK(facet_hierarchy_residual(g, j) < 1e-8);
        }
    }

    // the j = 3 step on a tetrahedron is the vertex sine rule
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const GramMatrix g = sample_tetrahedron_gram(seed);
        CHECK(facet_hierarchy_residual(g, 3) < 1e-9);
    }
}

TEST_CASE("simplex sampler and serialization shape") {
    for (int m = 3; m <= 6; ++m) {
        const SimplexConfig c = sample_simplex(m, 7);
        CHECK(c.dim() == m);
        CHECK(static_cast<int>(c.vectors.size()) == m);
        for (const auto& v : c.vectors) CHECK(std::abs(v.norm() - 1.0) < 1e-12);
        CHECK(c.gram.gsin_full() > 1e-3);
        // realize() reproduces the Gram
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                CHECK(std::abs(c.vectors[i].dot(c.vectors[j]) - c.gram.cos(i, j)) < 1e-10);
    }
    CHECK_THROWS_AS(sample_simplex(9, 1), dimension_error);
}
