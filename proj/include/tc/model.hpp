// model.hpp — Tavis-Cummings model parameters and excitation-sector blocks
//
// Energies are expressed in units of the cavity frequency, so the model is
// fully described by the atom count M, the dimensionless coupling g and the
// frequency ratio eta = omega_z / omega_c.  The total excitation number
// (photons plus excited atoms) is conserved, which splits the Hamiltonian
// into symmetric tridiagonal blocks of dimension min(k+1, M+1).

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace tc {

struct ModelParams {
    int atoms;          // M, number of two-level atoms
    double coupling;    // g, dimensionless photon-atom coupling
    double freq_ratio;  // eta = omega_z / omega_c, must be > 0

    ModelParams(int atoms_, double coupling_, double freq_ratio_)
        : atoms(atoms_), coupling(coupling_), freq_ratio(freq_ratio_) {
        if (atoms < 1) {
            throw std::invalid_argument("ModelParams: atom count must be >= 1");
        }
        if (!(coupling >= 0.0) || !std::isfinite(coupling)) {
            throw std::invalid_argument("ModelParams: coupling must be finite and >= 0");
        }
        // eta = 0 would make the whole atomic sector degenerate and the
        // ordering of block minima meaningless; reject it up front.
        if (!(freq_ratio > 0.0) || !std::isfinite(freq_ratio)) {
            throw std::invalid_argument("ModelParams: frequency ratio must be finite and > 0");
        }
    }
};

// Dimension of the excitation sector k: states |k-n photons, n excited atoms>
// with n = 0..min(k, M).
inline int block_dim(const ModelParams& p, int k) {
    if (k < 0) throw std::invalid_argument("block_dim: sector index must be >= 0");
    return std::min(k + 1, p.atoms + 1);
}

// One basis state of a sector: photon count and collective spin projection
// m3 = n - M/2 (half-integer when M is odd).
struct BasisLabel {
    int photons;
    double spin_z;
};

inline std::vector<BasisLabel> basis_labels(const ModelParams& p, int k) {
    const int d = block_dim(p, k);
    std::vector<BasisLabel> labels(static_cast<std::size_t>(d));
    for (int n = 0; n < d; ++n) {
        labels[static_cast<std::size_t>(n)] = {k - n, n - 0.5 * p.atoms};
    }
    return labels;
}

// Symmetric tridiagonal restriction of the Hamiltonian to one sector.
// Only the diagonal and the sub-diagonal are stored; blocks reach dimension
// M+1 and sweeps build millions of them.
struct BlockMatrix {
    int k = 0;
    std::vector<double> diag;  // diag[n] = (k-n) + eta*(n - M/2)
    std::vector<double> sub;   // sub[n-1] = -(g*sqrt(eta/M)) * sqrt((k-n+1) n (M-n+1))

    int dim() const { return static_cast<int>(diag.size()); }
};

// Matrix elements follow from a†|p> = sqrt(p+1)|p+1> and the collective
// lowering operator acting within the maximal-spin multiplet,
// S-|n excited> = sqrt(n (M-n+1)) |n-1 excited>.
inline BlockMatrix build_block(const ModelParams& p, int k) {
    const int d = block_dim(p, k);
    const int m = p.atoms;

    BlockMatrix block;
    block.k = k;
    block.diag.resize(static_cast<std::size_t>(d));
    block.sub.resize(static_cast<std::size_t>(d - 1));

    for (int n = 0; n < d; ++n) {
        block.diag[static_cast<std::size_t>(n)] = (k - n) + p.freq_ratio * (n - 0.5 * m);
    }
    const double hop = p.coupling * std::sqrt(p.freq_ratio / m);
    for (int n = 1; n < d; ++n) {
        const double amp2 = static_cast<double>(k - n + 1) * n * (m - n + 1);
        block.sub[static_cast<std::size_t>(n - 1)] = -hop * std::sqrt(amp2);
    }
    return block;
}

}  // namespace tc
