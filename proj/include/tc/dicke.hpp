// dicke.hpp — Dicke states, entanglement distance, ground-state weights and
// the photon-measurement preparation protocol
//
// The atomic reduced state of a sector-k ground state is a mixture of Dicke
// projectors with weights w_n = a_n^2.  Measuring zero photons projects the
// atoms onto the pure state |D^M_{k}>, which is the handle the preparation
// protocol exploits.

#pragma once

#include "tc/spectrum.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tc {

// Explicit M-qubit statevector.  Bit b of a basis index gives the state of
// qubit b, 1 = excited.  Capped at 14 qubits: every routine below walks all
// 2^M amplitudes, and the closed forms cover large M.
constexpr int kMaxStatevectorQubits = 14;

struct QubitState {
    int qubits = 0;
    std::vector<std::complex<double>> amp;
};

namespace detail {

inline double binomial(int m, int n) {
    double c = 1.0;
    for (int i = 1; i <= n; ++i) {
        c *= static_cast<double>(m - n + i) / static_cast<double>(i);
    }
    return c;
}

}  // namespace detail

// Symmetric state of n excitations shared among M qubits: equal amplitude
// C(M,n)^(-1/2) on every basis index of Hamming weight n.
inline QubitState dicke_state(int qubits, int excited) {
    if (qubits < 1 || qubits > kMaxStatevectorQubits) {
        throw std::invalid_argument("dicke_state: qubit count must be in [1, 14]");
    }
    if (excited < 0 || excited > qubits) {
        throw std::invalid_argument("dicke_state: excitation count must be in [0, M]");
    }
    QubitState state;
    state.qubits = qubits;
    state.amp.assign(std::size_t{1} << qubits, 0.0);
    const double a = 1.0 / std::sqrt(detail::binomial(qubits, excited));
    for (std::size_t idx = 0; idx < state.amp.size(); ++idx) {
        if (std::popcount(idx) == excited) {
            state.amp[idx] = a;
        }
    }
    return state;
}

// Per-qubit entanglement of a pure state:
//   E = 1 - (1/M) sum_mu sum_{j=x,y,z} <sigma_j^mu>^2.
// 0 for product states, 1 when every single-qubit Bloch vector vanishes.
inline double entanglement_distance(const QubitState& state) {
    const int m = state.qubits;
    if (m < 1 || m > kMaxStatevectorQubits) {
        throw std::invalid_argument("entanglement_distance: qubit count must be in [1, 14]");
    }
    if (state.amp.size() != (std::size_t{1} << m)) {
        throw std::invalid_argument("entanglement_distance: amplitude count != 2^M");
    }
    double norm2 = 0.0;
    for (const auto& a : state.amp) norm2 += std::norm(a);
    if (std::abs(norm2 - 1.0) > 1e-9) {
        throw std::invalid_argument("entanglement_distance: state is not unit norm");
    }

    double bloch_sum = 0.0;
    for (int mu = 0; mu < m; ++mu) {
        const std::size_t bit = std::size_t{1} << mu;
        double sx = 0.0, sy = 0.0, sz = 0.0;
        for (std::size_t idx = 0; idx < state.amp.size(); ++idx) {
            if (idx & bit) {
                sz += std::norm(state.amp[idx]);
            } else {
                sz -= std::norm(state.amp[idx]);
                const std::complex<double> cross =
                    std::conj(state.amp[idx]) * state.amp[idx | bit];
                sx += 2.0 * cross.real();
                sy += 2.0 * cross.imag();
            }
        }
        bloch_sum += sx * sx + sy * sy + sz * sz;
    }
    return 1.0 - bloch_sum / m;
}

// Closed form of the same measure for a Dicke state: only <sigma_z> survives
// and equals (2n - M)/M on every qubit.  Valid for any M.
inline double dicke_entanglement(int qubits, int excited) {
    if (qubits < 1) throw std::invalid_argument("dicke_entanglement: need M >= 1");
    if (excited < 0 || excited > qubits) {
        throw std::invalid_argument("dicke_entanglement: excitation count must be in [0, M]");
    }
    const double z = (2.0 * excited - qubits) / qubits;
    return 1.0 - z * z;
}

// ------------------------- ground-state composition --------------------------

// Weights of the Dicke projectors in the atomic reduced state, keyed by the
// excitation count n.
struct DickeWeights {
    int k = 0;  // source sector
    std::vector<double> weights;
};

inline DickeWeights dicke_weights(const GroundStateResult& gs) {
    DickeWeights out;
    out.k = gs.k_star;
    out.weights.resize(gs.coeffs.size());
    for (std::size_t n = 0; n < gs.coeffs.size(); ++n) {
        out.weights[n] = gs.coeffs[n] * gs.coeffs[n];
    }
    return out;
}

// Photon-number distribution of the ground state, ascending photon count.
// The entry with photon count k - n carries probability w_n.
inline std::vector<std::pair<int, double>> photon_distribution(const GroundStateResult& gs) {
    const DickeWeights w = dicke_weights(gs);
    std::vector<std::pair<int, double>> dist;
    dist.reserve(w.weights.size());
    for (std::size_t i = w.weights.size(); i-- > 0;) {
        dist.emplace_back(gs.k_star - static_cast<int>(i), w.weights[i]);
    }
    return dist;
}

// ------------------------------ protocol -------------------------------------

struct ProtocolReport {
    int k_star = 0;
    long samples = 0;
    std::uint64_t seed = 0;
    long successes = 0;
    double empirical_rate = 0.0;
    double theoretical_rate = 0.0;  // w_{k*}, exactly 0 when k* > M
    double mean_attempts = 0.0;     // NaN when no trial succeeded
    bool impossible = false;        // k* > M: zero photons cannot occur
};

// Repeated prepare-and-measure simulation.  Each trial draws one photon
// count; zero photons is a success and leaves the atoms in |D^M_{k*}>.
//
// Stream semantics (fixed for reproducibility): an mt19937_64 seeded with
// `seed`; each trial consumes exactly one draw, mapped to [0,1) by taking
// the top 53 bits, and resolved against the cumulative photon distribution
// in ascending photon-count order.
inline ProtocolReport run_protocol(const GroundStateResult& gs, long samples,
                                   std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("run_protocol: need samples >= 1");

    const auto dist = photon_distribution(gs);
    ProtocolReport report;
    report.k_star = gs.k_star;
    report.samples = samples;
    report.seed = seed;
    report.impossible = gs.k_star > gs.params.atoms;
    report.theoretical_rate =
        (!report.impossible && dist.front().first == 0) ? dist.front().second : 0.0;

    std::mt19937_64 rng(seed);
    long run_length = 0;
    long completed_runs = 0;
    long total_attempts = 0;
    for (long t = 0; t < samples; ++t) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        double cdf = 0.0;
        int photons = dist.back().first;
        for (const auto& [count, prob] : dist) {
            cdf += prob;
            if (u < cdf) {
                photons = count;
                break;
            }
        }
        ++run_length;
        if (photons == 0) {
            ++report.successes;
            ++completed_runs;
            total_attempts += run_length;
            run_length = 0;
        }
    }
    report.empirical_rate = static_cast<double>(report.successes) / samples;
    report.mean_attempts =
        completed_runs > 0
            ? static_cast<double>(total_attempts) / completed_runs
            : std::numeric_limits<double>::quiet_NaN();
    return report;
}

}  // namespace tc
