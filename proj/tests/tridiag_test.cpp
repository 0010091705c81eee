#include "tc/tridiag.hpp"

#include <catch2/catch.hpp>

#include <cmath>
#include <random>
#include <vector>

using tc::dense_spectrum;
using tc::lowest_eigenpair;
using tc::lowest_eigenvalue;
using tc::sturm_count;

namespace {

// Scale used by the solver contracts.
double inf_norm(const std::vector<double>& diag, const std::vector<double>& sub) {
    double scale = 0.0;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        double row = std::abs(diag[i]);
        if (i > 0) row += std::abs(sub[i - 1]);
        if (i + 1 < diag.size()) row += std::abs(sub[i]);
        scale = std::max(scale, row);
    }
    return scale;
}

double residual(const std::vector<double>& diag, const std::vector<double>& sub,
                const tc::EigenSolution& sol) {
    const std::size_t n = diag.size();
    double r2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double acc = diag[i] * sol.vector[i] - sol.value * sol.vector[i];
        if (i > 0) acc += sub[i - 1] * sol.vector[i - 1];
        if (i + 1 < n) acc += sub[i] * sol.vector[i + 1];
        r2 += acc * acc;
    }
    return std::sqrt(r2);
}

}  // namespace

TEST_CASE("one-dimensional matrix is returned verbatim") {
    const double eta = 0.37;
    const auto sol = lowest_eigenpair({-eta}, {});
    CHECK(sol.value == -eta);
    REQUIRE(sol.vector.size() == 1);
    CHECK(sol.vector[0] == 1.0);
}

TEST_CASE("closed-form 2x2 eigenvalue") {
    // trace/determinant form: lambda = t/2 - sqrt((t/2)^2 - det)
    const std::vector<double> diag{0.99, 0.0};
    const std::vector<double> sub{-0.2};
    const double expect = 0.495 - std::sqrt(0.495 * 0.495 + 0.04);

    CHECK(lowest_eigenvalue(diag, sub) == Approx(expect).margin(1e-13));
    const auto sol = lowest_eigenpair(diag, sub);
    CHECK(sol.value == Approx(expect).margin(1e-13));
    CHECK(sol.vector[0] > 0.0);  // sign convention
}

TEST_CASE("uniform tridiagonal has the cosine spectrum") {
    for (int d : {2, 5, 17, 40}) {
        const double a = 0.3, b = 0.8;
        const std::vector<double> diag(static_cast<std::size_t>(d), a);
        const std::vector<double> sub(static_cast<std::size_t>(d - 1), -b);
        const double expect = a - 2.0 * b * std::cos(M_PI / (d + 1));
        CHECK(lowest_eigenvalue(diag, sub) == Approx(expect).margin(1e-12));
    }
}

TEST_CASE("sturm counts around the 2x2 spectrum") {
    const std::vector<double> diag{0.99, 0.0};
    const std::vector<double> sub{-0.2};
    CHECK(sturm_count(diag, sub, -1.0) == 0);
    CHECK(sturm_count(diag, sub, 0.0) == 1);
    CHECK(sturm_count(diag, sub, 2.0) == 2);
}

TEST_CASE("dense spectrum on closed-form cases") {
    const auto single = dense_spectrum({-0.25}, {});
    REQUIRE(single.size() == 1);
    CHECK(single[0] == Approx(-0.25).margin(1e-15));

    const auto pair = dense_spectrum({0.99, 0.0}, {-0.2});
    REQUIRE(pair.size() == 2);
    const double root = std::sqrt(0.495 * 0.495 + 0.04);
    CHECK(pair[0] == Approx(0.495 - root).margin(1e-12));
    CHECK(pair[1] == Approx(0.495 + root).margin(1e-12));

    const auto triple = dense_spectrum({0.0, 0.0, 0.0}, {-1.0, -1.0});
    REQUIRE(triple.size() == 3);
    CHECK(triple[0] == Approx(-std::sqrt(2.0)).margin(1e-12));
    CHECK(triple[1] == Approx(0.0).margin(1e-12));
    CHECK(triple[2] == Approx(std::sqrt(2.0)).margin(1e-12));
}

TEST_CASE("contract violations are rejected") {
    CHECK_THROWS_AS(lowest_eigenpair({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(lowest_eigenpair({1.0, 2.0}, {}), std::invalid_argument);
    CHECK_THROWS_AS(lowest_eigenpair({1.0}, {0.5}), std::invalid_argument);
    CHECK_THROWS_AS(lowest_eigenpair({1.0, std::nan("")}, {0.5}), std::invalid_argument);
    CHECK_THROWS_AS(lowest_eigenpair({1.0, 2.0}, {1.0}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(sturm_count({1.0, 2.0}, {0.5}, std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(
        dense_spectrum(std::vector<double>(2001, 0.0), std::vector<double>(2000, -1.0)),
        std::invalid_argument);
}

TEST_CASE("random matrices: solver agrees with the dense route") {
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> entry(-2.0, 2.0);
    std::uniform_int_distribution<int> dims(1, 50);

    for (int trial = 0; trial < 1000; ++trial) {
        const int d = dims(rng);
        std::vector<double> diag(static_cast<std::size_t>(d));
        std::vector<double> sub(static_cast<std::size_t>(d - 1));
        for (double& x : diag) x = entry(rng);
        for (double& x : sub) x = entry(rng);

        const auto spectrum = dense_spectrum(diag, sub);
        const auto sol = lowest_eigenpair(diag, sub);
        const double scale = inf_norm(diag, sub);
        const double tol = 1e-10 * (1.0 + scale);

        REQUIRE(sol.value == Approx(spectrum[0]).margin(tol));
        REQUIRE(residual(diag, sub, sol) <= tol);

        // Unit norm.
        double nrm = 0.0;
        for (double x : sol.vector) nrm += x * x;
        REQUIRE(std::sqrt(nrm) == Approx(1.0).margin(1e-12));

        // Rayleigh quotient of the returned vector equals the returned value.
        double rq = 0.0;
        for (std::size_t i = 0; i < sol.vector.size(); ++i) {
            double acc = diag[i] * sol.vector[i];
            if (i > 0) acc += sub[i - 1] * sol.vector[i - 1];
            if (i + 1 < sol.vector.size()) acc += sub[i] * sol.vector[i + 1];
            rq += sol.vector[i] * acc;
        }
        REQUIRE(rq == Approx(sol.value).margin(1e-12 * (1.0 + std::abs(sol.value))));

        // Variational bound against the smallest diagonal entry.
        double min_diag = diag[0];
        for (double x : diag) min_diag = std::min(min_diag, x);
        REQUIRE(sol.value <= min_diag + tol);

        // Sturm counts bracket the smallest eigenvalue.
        const double eps = 1e-8 * (1.0 + scale);
        REQUIRE(sturm_count(diag, sub, spectrum[0] - eps) == 0);
        REQUIRE(sturm_count(diag, sub, spectrum[0] + eps) >= 1);
    }
}

TEST_CASE("variational bound is strict with nonzero couplings") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> entry(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> diag(8), sub(7);
        for (double& x : diag) x = entry(rng);
        for (double& x : sub) x = entry(rng) > 0 ? 0.3 : -0.3;
        double min_diag = diag[0];
        for (double x : diag) min_diag = std::min(min_diag, x);
        CHECK(lowest_eigenvalue(diag, sub) < min_diag);
    }
}

TEST_CASE("graded eigenvectors come out with uniform sign") {
    // Tiny couplings against a steep diagonal: the true tail decays far below
    // eps, where plain inverse iteration would leave sign noise.
    std::vector<double> diag(40), sub(39);
    for (int i = 0; i < 40; ++i) diag[static_cast<std::size_t>(i)] = 40.0 - i;
    for (double& b : sub) b = -1e-3;
    const auto sol = lowest_eigenpair(diag, sub);
    for (double x : sol.vector) CHECK(x > 0.0);
    CHECK(sol.vector[39] == Approx(1.0).margin(1e-5));
    CHECK(sol.vector[0] < 1e-30);
}
