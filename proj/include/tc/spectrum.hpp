// spectrum.hpp — global ground state across excitation sectors
//
// E_k denotes the lowest energy of sector k.  The global ground state sits in
// the sector k* minimizing E_k; as the coupling grows, k* climbs through a
// staircase of level crossings.  This header locates k*, the crossings g_k,
// and evaluates the small-eta expansion of E_k for comparison.

#pragma once

#include "tc/model.hpp"
#include "tc/tridiag.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tc {

// Lowest eigenpair of one sector, coefficients re-signed to the positive
// orthant (the ground vector of an irreducible block with negative
// off-diagonals has uniform sign).
struct BlockGroundState {
    int k = 0;
    double energy = 0.0;
    std::vector<double> coeffs;
};

inline BlockGroundState block_ground_state(const ModelParams& p, int k,
                                           double tol = 1e-12) {
    const BlockMatrix block = build_block(p, k);
    EigenSolution sol = lowest_eigenpair(block.diag, block.sub, tol);

    double pos = 0.0, neg = 0.0;
    for (double x : sol.vector) {
        if (x >= 0.0) pos += x;
        else neg -= x;
    }
    if (neg > pos) {
        for (double& x : sol.vector) x = -x;
    }
    return {k, sol.value, std::move(sol.vector)};
}

inline double block_ground_energy(const ModelParams& p, int k, double tol = 1e-12) {
    const BlockMatrix block = build_block(p, k);
    return lowest_eigenvalue(block.diag, block.sub, tol);
}

// Thrown when the upward sector scan hits its cap while the minimum is still
// moving — the signature of superradiant runaway at large g*sqrt(eta).
class scan_cap_error : public std::runtime_error {
public:
    scan_cap_error(int scanned, double last_energy)
        : std::runtime_error("sector scan cap exhausted at k = " +
                             std::to_string(scanned) +
                             " before a minimum could be certified"),
          scanned_k(scanned),
          last_energy(last_energy) {}
    int scanned_k;
    double last_energy;
};

struct ScanPolicy {
    int max_blocks = 0;   // cap on the largest k scanned; 0 means 8*M
    int rise_window = 0;  // consecutive strictly-rising E_k required; 0 means M
};

struct GroundStateResult {
    ModelParams params;
    int k_star = 0;
    double energy = 0.0;
    std::vector<double> coeffs;
    int scanned_k_max = 0;
};

// Scan k upward keeping the running minimum.  Past k = M the photon term
// grows linearly while the coupling term grows like sqrt(k), so a sustained
// rise certifies that no later minimum exists.  Ties go to the smaller k.
inline GroundStateResult find_kstar(const ModelParams& p, ScanPolicy policy = {}) {
    const int cap = policy.max_blocks > 0 ? policy.max_blocks : 8 * p.atoms;
    const int rise_window = policy.rise_window > 0 ? policy.rise_window : p.atoms;

    int best_k = 0;
    double best_e = block_ground_energy(p, 0);
    double prev_e = best_e;
    int rises = 0;
    int scanned = 0;
    bool certified = false;

    for (int k = 1; k <= cap; ++k) {
        const double e = block_ground_energy(p, k);
        scanned = k;
        rises = (e > prev_e) ? rises + 1 : 0;
        prev_e = e;

        const double tie = 1e-12 * (1.0 + std::max(std::abs(e), std::abs(best_e)));
        if (e < best_e - tie) {
            best_k = k;
            best_e = e;
        }
        if (k > p.atoms && e > best_e && rises >= rise_window) {
            certified = true;
            break;
        }
    }
    if (!certified && cap > 0) {
        throw scan_cap_error(scanned, prev_e);
    }

    BlockGroundState gs = block_ground_state(p, best_k);
    return {p, best_k, gs.energy, std::move(gs.coeffs), scanned};
}

// ---------------------------- small-eta expansion ----------------------------

struct PerturbativePrediction {
    int k = 0;
    double energy = 0.0;
    bool valid_regime = false;  // heuristic: eta <= 0.05 and g*sqrt(eta) <= 0.3
};

// Second-order energy of sector k in powers of sqrt(eta).
inline PerturbativePrediction perturbative_energy(const ModelParams& p, int k) {
    if (k < 0) throw std::invalid_argument("perturbative_energy: k must be >= 0");
    const double m = p.atoms;
    const double g2 = p.coupling * p.coupling;
    double e;
    if (k <= p.atoms) {
        e = p.freq_ratio * (k - 0.5 * m - g2 * k * (1.0 - (k - 1.0) / m));
    } else {
        e = (k - m) + p.freq_ratio * (0.5 * m - g2);
    }
    const bool valid =
        p.freq_ratio <= 0.05 && p.coupling * std::sqrt(p.freq_ratio) <= 0.3;
    return {k, e, valid};
}

// Asymptotic excitation number ceil(M/2 (1 - 1/g^2)), clamped to [0, M].
// The argument is snapped to the nearest integer when within 1e-9 so that
// evaluation exactly at a crossing lands on the smaller sector.
inline int kstar_perturbative(const ModelParams& p) {
    if (p.coupling <= 0.0) return 0;
    double x = 0.5 * p.atoms * (1.0 - 1.0 / (p.coupling * p.coupling));
    const double r = std::round(x);
    if (std::abs(x - r) < 1e-9) x = r;
    const double k = std::ceil(x);
    if (k < 0.0) return 0;
    if (k > p.atoms) return p.atoms;
    return static_cast<int>(k);
}

// Asymptotic position of the crossing between E_{k-1} and E_k.  Beyond
// k = M/2 + 1 the expansion predicts no crossing; +infinity is returned.
inline double crossing_perturbative(int atoms, int k) {
    if (k < 1) throw std::invalid_argument("crossing_perturbative: k must be >= 1");
    const double denom = atoms - 2.0 * k + 2.0;
    if (denom <= 0.0) return std::numeric_limits<double>::infinity();
    return std::sqrt(atoms / denom);
}

class bracket_error : public std::runtime_error {
public:
    explicit bracket_error(const std::string& what) : std::runtime_error(what) {}
};

// Root of E_k(g) - E_{k-1}(g) in g, bisected to 1e-10.  Without an explicit
// bracket, the asymptotic crossing +/- 50% is used.
inline double find_crossing(int atoms, double eta, int k,
                            std::optional<std::pair<double, double>> bracket = {}) {
    if (k < 1) throw std::invalid_argument("find_crossing: k must be >= 1");
    double lo, hi;
    if (bracket) {
        lo = bracket->first;
        hi = bracket->second;
        if (!(lo >= 0.0) || !(hi > lo)) {
            throw std::invalid_argument("find_crossing: malformed bracket");
        }
    } else {
        const double center = crossing_perturbative(atoms, k);
        if (!std::isfinite(center)) {
            throw std::invalid_argument(
                "find_crossing: no asymptotic bracket for k > M/2 + 1; pass one explicitly");
        }
        lo = 0.5 * center;
        hi = 1.5 * center;
    }

    // The difference slope scales with eta, so root displacement is the
    // energy error divided by eta; solve the sector energies tightly.
    auto diff = [&](double g) {
        const ModelParams p(atoms, g, eta);
        return block_ground_energy(p, k, 1e-14) - block_ground_energy(p, k - 1, 1e-14);
    };

    double f_lo = diff(lo);
    double f_hi = diff(hi);
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    if ((f_lo > 0.0) == (f_hi > 0.0)) {
        throw bracket_error("find_crossing: energy difference does not change sign in bracket");
    }

    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = diff(mid);
        if (f_mid == 0.0) return mid;
        if ((f_mid > 0.0) == (f_lo > 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

struct CrossingEntry {
    int k = 0;
    double g_exact = 0.0;
    double g_pert = 0.0;
};

inline std::vector<CrossingEntry> crossing_table(int atoms, double eta,
                                                 int k_from, int k_to) {
    if (k_from < 1 || k_to < k_from) {
        throw std::invalid_argument("crossing_table: need 1 <= k_from <= k_to");
    }
    std::vector<CrossingEntry> table;
    table.reserve(static_cast<std::size_t>(k_to - k_from + 1));
    for (int k = k_from; k <= k_to; ++k) {
        const double pert = crossing_perturbative(atoms, k);
        table.push_back({k, find_crossing(atoms, eta, k), pert});
    }
    return table;
}

// ------------------------------- staircase ----------------------------------

struct StaircasePoint {
    double g = 0.0;
    int k_star = 0;
    bool cap_exhausted = false;  // when set, k_star is meaningless
};

inline std::vector<StaircasePoint> staircase(int atoms, double eta,
                                             const std::vector<double>& g_grid,
                                             ScanPolicy policy = {}) {
    std::vector<StaircasePoint> points;
    points.reserve(g_grid.size());
    for (double g : g_grid) {
        const ModelParams p(atoms, g, eta);
        try {
            points.push_back({g, find_kstar(p, policy).k_star, false});
        } catch (const scan_cap_error&) {
            points.push_back({g, 0, true});
        }
    }
    return points;
}

}  // namespace tc
