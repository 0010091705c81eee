// oracle.hpp — brute-force validation backends
//
// Two independent constructions of the same Hamiltonian, neither sharing code
// with the sector solver: (a) collective-spin ladder matrices on a truncated
// Fock space, (b) per-qubit Pauli embeddings on the full 2^M qubit space.
// Agreement of all three ground energies is the evidence the tests rely on.
// Test-time only; nothing here is performance-sensitive.

#pragma once

#include "tc/spectrum.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace tc::oracle {

namespace detail {

// Kronecker product, smallest useful version.
inline Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

inline Eigen::MatrixXd photon_annihilator(int n_max) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_max + 1, n_max + 1);
    for (int p = 1; p <= n_max; ++p) a(p - 1, p) = std::sqrt(static_cast<double>(p));
    return a;
}

}  // namespace detail

// Hamiltonian on (Fock cutoff n_max) x (maximal-spin multiplet), built from
// the angular-momentum ladder formula S-|S,m> = sqrt(S(S+1) - m(m-1))|S,m-1>
// with S = M/2.  Basis index = p * (M+1) + m_idx, m_idx = 0..M.
inline Eigen::MatrixXd collective_hamiltonian(int atoms, int n_max, double g,
                                              double eta) {
    if (atoms < 1 || n_max < 0) {
        throw std::invalid_argument("collective_hamiltonian: bad sizes");
    }
    const int s_dim = atoms + 1;
    const double s = 0.5 * atoms;

    Eigen::MatrixXd sz = Eigen::MatrixXd::Zero(s_dim, s_dim);
    Eigen::MatrixXd sminus = Eigen::MatrixXd::Zero(s_dim, s_dim);
    for (int i = 0; i < s_dim; ++i) {
        const double m = i - s;
        sz(i, i) = m;
        if (i > 0) sminus(i - 1, i) = std::sqrt(s * (s + 1.0) - m * (m - 1.0));
    }
    const Eigen::MatrixXd splus = sminus.transpose();

    const Eigen::MatrixXd a = detail::photon_annihilator(n_max);
    const Eigen::MatrixXd number = a.transpose() * a;
    const Eigen::MatrixXd id_p = Eigen::MatrixXd::Identity(n_max + 1, n_max + 1);
    const Eigen::MatrixXd id_s = Eigen::MatrixXd::Identity(s_dim, s_dim);

    return detail::kron(number, id_s) + eta * detail::kron(id_p, sz) -
           g * std::sqrt(eta / atoms) *
               (detail::kron(a.transpose(), sminus) + detail::kron(a, splus));
}

struct DenseGround {
    double energy = 0.0;
    double tail_weight = 0.0;  // ground-state weight on the top two Fock levels
    bool cutoff_safe = false;  // tail_weight <= 1e-8
};

inline DenseGround dense_ground(int atoms, int n_max, double g, double eta) {
    const long dim = static_cast<long>(n_max + 1) * (atoms + 1);
    if (dim > 4000) {
        throw std::invalid_argument("dense_ground: (n_max+1)(M+1) capped at 4000");
    }
    const Eigen::MatrixXd h = collective_hamiltonian(atoms, n_max, g, eta);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("dense_ground: eigensolver failed");
    }
    DenseGround out;
    out.energy = solver.eigenvalues()(0);
    const auto v = solver.eigenvectors().col(0);
    const int s_dim = atoms + 1;
    for (int p = std::max(0, n_max - 1); p <= n_max; ++p) {
        for (int m = 0; m < s_dim; ++m) {
            const double c = v(static_cast<Eigen::Index>(p) * s_dim + m);
            out.tail_weight += c * c;
        }
    }
    out.cutoff_safe = out.tail_weight <= 1e-8;
    return out;
}

inline double dense_ground_energy(int atoms, int n_max, double g, double eta) {
    return dense_ground(atoms, n_max, g, eta).energy;
}

// Spectrum of the truncated dense Hamiltonian restricted to the subspace of
// total excitation k (photons + excited atoms).  Cross-checks the sector
// construction state by state.
inline std::vector<double> sector_spectrum(int atoms, int n_max, double g,
                                           double eta, int k) {
    if (k < 0 || k > n_max) {
        throw std::invalid_argument("sector_spectrum: need 0 <= k <= n_max");
    }
    const Eigen::MatrixXd h = collective_hamiltonian(atoms, n_max, g, eta);
    const int s_dim = atoms + 1;
    std::vector<Eigen::Index> indices;
    for (int m_idx = 0; m_idx <= std::min(k, atoms); ++m_idx) {
        const int p = k - m_idx;
        if (p <= n_max) indices.push_back(static_cast<Eigen::Index>(p) * s_dim + m_idx);
    }
    const Eigen::Index d = static_cast<Eigen::Index>(indices.size());
    Eigen::MatrixXd block(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            block(i, j) = h(indices[static_cast<std::size_t>(i)],
                            indices[static_cast<std::size_t>(j)]);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(block, Eigen::EigenvaluesOnly);
    return std::vector<double>(solver.eigenvalues().data(),
                               solver.eigenvalues().data() + d);
}

// Hamiltonian on (Fock cutoff) x (all 2^M distinguishable qubits), with the
// spin operators assembled from single-qubit Pauli embeddings.  Includes every
// spin sector, so agreement with the collective backend also probes the
// maximal-spin assumption.  Bit b of a basis index = state of qubit b.
inline Eigen::MatrixXd qubit_hamiltonian(int atoms, int n_max, double g, double eta) {
    if (atoms < 1 || atoms > 4 || n_max < 0 || n_max > 40) {
        throw std::invalid_argument("qubit_hamiltonian: M capped at 4, n_max at 40");
    }
    const int q_dim = 1 << atoms;

    Eigen::MatrixXd sz = Eigen::MatrixXd::Zero(q_dim, q_dim);
    Eigen::MatrixXd splus = Eigen::MatrixXd::Zero(q_dim, q_dim);
    for (int idx = 0; idx < q_dim; ++idx) {
        for (int b = 0; b < atoms; ++b) {
            const int bit = 1 << b;
            sz(idx, idx) += (idx & bit) ? 0.5 : -0.5;
            if (!(idx & bit)) splus(idx | bit, idx) += 1.0;
        }
    }
    const Eigen::MatrixXd sminus = splus.transpose();

    const Eigen::MatrixXd a = detail::photon_annihilator(n_max);
    const Eigen::MatrixXd number = a.transpose() * a;
    const Eigen::MatrixXd id_p = Eigen::MatrixXd::Identity(n_max + 1, n_max + 1);
    const Eigen::MatrixXd id_q = Eigen::MatrixXd::Identity(q_dim, q_dim);

    return detail::kron(number, id_q) + eta * detail::kron(id_p, sz) -
           g * std::sqrt(eta / atoms) *
               (detail::kron(a.transpose(), sminus) + detail::kron(a, splus));
}

inline double qubit_ground_energy(int atoms, int n_max, double g, double eta) {
    const Eigen::MatrixXd h = qubit_hamiltonian(atoms, n_max, g, eta);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("qubit_ground_energy: eigensolver failed");
    }
    return solver.eigenvalues()(0);
}

struct BackendComparison {
    int atoms = 0;
    int n_max = 0;
    double g = 0.0;
    double eta = 0.0;
    int k_star = 0;
    double block_scan = 0.0;
    double dense = 0.0;
    double qubit = 0.0;
    double max_pairwise_diff = 0.0;
    bool cutoff_safe = false;
};

inline BackendComparison compare_backends(int atoms, int n_max, double g, double eta,
                                          ScanPolicy policy = {}) {
    const ModelParams params(atoms, g, eta);
    const GroundStateResult gs = find_kstar(params, policy);
    const DenseGround dense = dense_ground(atoms, n_max, g, eta);
    const double qubit = qubit_ground_energy(atoms, n_max, g, eta);

    BackendComparison cmp;
    cmp.atoms = atoms;
    cmp.n_max = n_max;
    cmp.g = g;
    cmp.eta = eta;
    cmp.k_star = gs.k_star;
    cmp.block_scan = gs.energy;
    cmp.dense = dense.energy;
    cmp.qubit = qubit;
    cmp.cutoff_safe = dense.cutoff_safe;
    cmp.max_pairwise_diff = std::max({std::abs(cmp.block_scan - cmp.dense),
                                      std::abs(cmp.block_scan - cmp.qubit),
                                      std::abs(cmp.dense - cmp.qubit)});
    return cmp;
}

}  // namespace tc::oracle
