#include "tc/oracle.hpp"

#include "tc/model.hpp"
#include "tc/tridiag.hpp"

#include <catch2/catch.hpp>

#include <cmath>

using tc::ModelParams;
using tc::ScanPolicy;
using tc::oracle::compare_backends;
using tc::oracle::dense_ground;
using tc::oracle::dense_ground_energy;
using tc::oracle::qubit_ground_energy;
using tc::oracle::sector_spectrum;

TEST_CASE("dense backend reproduces closed-form ground energies") {
    // Below the transition: E = -eta M / 2.
    CHECK(dense_ground_energy(2, 30, 0.5, 0.3) == Approx(-0.3).margin(1e-10));

    // 2x2 sector value of (M=2, eta=0.01, g=2).
    const double expect = 0.495 - std::sqrt(0.495 * 0.495 + 0.04);
    CHECK(dense_ground_energy(2, 30, 2.0, 0.01) == Approx(expect).margin(1e-10));

    // Exact degeneracy at g = 1.
    CHECK(dense_ground_energy(4, 40, 1.0, 1e-3) == Approx(-2e-3).margin(1e-10));
}

TEST_CASE("qubit backend agrees across all spin sectors") {
    CHECK(qubit_ground_energy(2, 30, 0.5, 0.3) == Approx(-0.3).margin(1e-10));
    CHECK(qubit_ground_energy(2, 30, 0.0, 0.25) == Approx(-0.25).margin(1e-12));

    const double block = tc::find_kstar(ModelParams(3, 1.5, 0.01)).energy;
    const double dense = dense_ground_energy(3, 30, 1.5, 0.01);
    const double qubit = qubit_ground_energy(3, 30, 1.5, 0.01);
    CHECK(std::abs(block - dense) <= 1e-10);
    CHECK(std::abs(block - qubit) <= 1e-10);
}

TEST_CASE("three backends agree on a small parameter grid") {
    for (int m : {2, 3}) {
        for (double g : {0.2, 1.0, 2.4}) {
            for (double eta : {1e-3, 0.1, 0.5}) {
                const int kstar =
                    tc::find_kstar(ModelParams(m, g, eta), ScanPolicy{400, 0}).k_star;
                const int n_max = kstar + m + 10;
                const auto cmp = compare_backends(m, n_max, g, eta, ScanPolicy{400, 0});
                INFO("M=" << m << " g=" << g << " eta=" << eta);
                CHECK(cmp.max_pairwise_diff <= 1e-10);
                CHECK(cmp.cutoff_safe);
            }
        }
    }
}

TEST_CASE("excitation sectors of the dense model match the tridiagonal blocks") {
    const ModelParams p(3, 1.3, 0.05);
    for (int k = 0; k <= 10; ++k) {
        const auto block = tc::build_block(p, k);
        const auto expect = tc::dense_spectrum(block.diag, block.sub);
        const auto got = sector_spectrum(3, 25, 1.3, 0.05, k);
        REQUIRE(got.size() == expect.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
            CHECK(got[i] == Approx(expect[i]).margin(1e-9));
        }
    }
}

TEST_CASE("ground energy is stable against the Fock cutoff") {
    const double a = dense_ground_energy(3, 20, 1.2, 0.05);
    const double b = dense_ground_energy(3, 30, 1.2, 0.05);
    CHECK(std::abs(a - b) <= 1e-10);
}

TEST_CASE("cutoff safety flag trips when the tail carries weight") {
    const auto tight = dense_ground(2, 3, 3.0, 0.5);
    CHECK_FALSE(tight.cutoff_safe);
    CHECK(tight.tail_weight > 1e-8);

    const auto roomy = dense_ground(2, 40, 3.0, 0.5);
    CHECK(roomy.cutoff_safe);
}

TEST_CASE("size guards") {
    CHECK_THROWS_AS(dense_ground(64, 80, 1.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(qubit_ground_energy(5, 20, 1.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(qubit_ground_energy(3, 41, 1.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(sector_spectrum(3, 20, 1.0, 0.1, 30), std::invalid_argument);
}
