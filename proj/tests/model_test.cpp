#include "tc/model.hpp"

#include <catch2/catch.hpp>

#include <cmath>

using tc::basis_labels;
using tc::block_dim;
using tc::build_block;
using tc::ModelParams;

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(ModelParams(0, 1.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(ModelParams(-3, 1.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(ModelParams(2, -0.5, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(ModelParams(2, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ModelParams(2, 1.0, -0.2), std::invalid_argument);
    CHECK_THROWS_AS(ModelParams(2, std::nan(""), 0.1), std::invalid_argument);
    CHECK_NOTHROW(ModelParams(1, 0.0, 1e-9));
}

TEST_CASE("k = 0 sector is the single fully de-excited state") {
    const ModelParams p(2, 1.7, 0.42);
    const auto block = build_block(p, 0);
    REQUIRE(block.dim() == 1);
    CHECK(block.diag[0] == Approx(-0.42).margin(1e-15));
    CHECK(block.sub.empty());
}

TEST_CASE("hand-evaluated 2x2 sector") {
    const ModelParams p(2, 2.0, 0.01);
    const auto block = build_block(p, 1);
    REQUIRE(block.dim() == 2);
    CHECK(block.diag[0] == Approx(0.99).margin(1e-15));
    CHECK(block.diag[1] == Approx(0.0).margin(1e-15));
    REQUIRE(block.sub.size() == 1);
    CHECK(block.sub[0] == Approx(-0.2).margin(1e-15));
}

TEST_CASE("sector dimension saturates at M + 1") {
    const ModelParams p(64, 1.0, 0.5);
    CHECK(build_block(p, 200).dim() == 65);
    CHECK(block_dim(p, 200) == 65);
    CHECK_THROWS_AS(block_dim(p, -1), std::invalid_argument);
}

TEST_CASE("basis labels enumerate photons against excitations") {
    const ModelParams p2(2, 1.0, 0.3);
    const auto l1 = basis_labels(p2, 1);
    REQUIRE(l1.size() == 2);
    CHECK(l1[0].photons == 1);
    CHECK(l1[0].spin_z == -1.0);
    CHECK(l1[1].photons == 0);
    CHECK(l1[1].spin_z == 0.0);

    const auto l3 = basis_labels(p2, 3);
    REQUIRE(l3.size() == 3);
    CHECK(l3[0].photons == 3);
    CHECK(l3[2].photons == 1);
    CHECK(l3[2].spin_z == 1.0);

    const ModelParams p4(4, 1.0, 0.3);
    const auto l2 = basis_labels(p4, 2);
    REQUIRE(l2.size() == 3);
    CHECK(l2[0].photons == 2);
    CHECK(l2[0].spin_z == -2.0);
    CHECK(l2[2].photons == 0);
    CHECK(l2[2].spin_z == 0.0);
}

TEST_CASE("excitation number is constant across each sector basis") {
    for (int m = 1; m <= 20; ++m) {
        const ModelParams p(m, 0.9, 0.2);
        for (int k = 0; k <= 3 * m; ++k) {
            const auto labels = basis_labels(p, k);
            REQUIRE(static_cast<int>(labels.size()) == std::min(k + 1, m + 1));
            for (const auto& label : labels) {
                CHECK(label.photons >= 0);
                CHECK(label.photons + label.spin_z + 0.5 * m == Approx(k).margin(0.0));
            }
        }
    }
}

TEST_CASE("matrix elements match an independent ladder-operator evaluation") {
    // Rebuild the couplings from sqrt(p+1) * sqrt(S(S+1) - m(m-1)) without the
    // simplified closed form used by the implementation.
    for (int m : {1, 2, 5, 8, 64}) {
        for (int k : {1, 3, 7, 100}) {
            const ModelParams p(m, 1.3, 0.07);
            const auto block = build_block(p, k);
            const double s = 0.5 * m;
            for (int n = 1; n < block.dim(); ++n) {
                const double mval = n - s;
                const double photon = std::sqrt(static_cast<double>(k - n + 1));
                const double spin = std::sqrt(s * (s + 1.0) - mval * (mval - 1.0));
                const double expect = -p.coupling * std::sqrt(p.freq_ratio / m) * photon * spin;
                CHECK(block.sub[static_cast<std::size_t>(n - 1)] ==
                      Approx(expect).epsilon(1e-14));
            }
        }
    }
}

TEST_CASE("raising k shifts the photon content only") {
    const ModelParams p(6, 1.1, 0.2);
    for (int k = 6; k <= 9; ++k) {
        const auto a = build_block(p, k);
        const auto b = build_block(p, k + 1);
        REQUIRE(a.dim() == b.dim());
        for (int n = 0; n < a.dim(); ++n) {
            CHECK(b.diag[static_cast<std::size_t>(n)] -
                      a.diag[static_cast<std::size_t>(n)] ==
                  Approx(1.0).margin(1e-14));
        }
        for (int n = 1; n < a.dim(); ++n) {
            const double ratio = std::sqrt(static_cast<double>(k + 1 - n + 1) /
                                           static_cast<double>(k - n + 1));
            CHECK(b.sub[static_cast<std::size_t>(n - 1)] /
                      a.sub[static_cast<std::size_t>(n - 1)] ==
                  Approx(ratio).epsilon(1e-14));
        }
    }
}

TEST_CASE("sub-diagonal is strictly negative for positive coupling") {
    const ModelParams p(5, 0.8, 0.3);
    const auto block = build_block(p, 4);
    for (double b : block.sub) CHECK(b < 0.0);

    const ModelParams free_field(5, 0.0, 0.3);
    const auto diag_block = build_block(free_field, 4);
    for (double b : diag_block.sub) CHECK(b == 0.0);
}
