// io.hpp — report serialization
//
// CSV schemas (header line + one row per record):
//   sweep      g,eta,value,mask      (eta outer, row-major; empty mask cell
//                                     when no threshold; "nan" value and mask 0
//                                     on cap-exhausted cells)
//   staircase  g,k_star              (empty k_star on cap-exhausted points)
//   crossings  k,g_exact,g_pert
//   perturb    k,e_exact,e_pert,valid_regime
//
// JSON reports carry schema_version = 1, every input, and every output.
// Floating-point values are written with 17 significant digits so that
// parsing them back reproduces the doubles bit for bit; NaN becomes null.

#pragma once

#include "tc/dicke.hpp"
#include "tc/model.hpp"
#include "tc/oracle.hpp"
#include "tc/spectrum.hpp"
#include "tc/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace tc::io {

inline constexpr int kSchemaVersion = 1;

inline std::string fmt(double x) {
    if (std::isnan(x)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// JSON value for a double: NaN/inf have no JSON representation and map to null.
inline std::string jnum(double x) {
    if (!std::isfinite(x)) return "null";
    return fmt(x);
}

inline std::string jarray(const std::vector<double>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += jnum(xs[i]);
    }
    return out + "]";
}

// ------------------------------- CSV ----------------------------------------

inline void sweep_csv(const RegionMap& map, std::ostream& os) {
    os << "g,eta,value,mask\n";
    const std::size_t n_g = map.g_values.size();
    for (std::size_t idx = 0; idx < map.values.size(); ++idx) {
        os << fmt(map.g_values[idx % n_g]) << ',' << fmt(map.eta_values[idx / n_g])
           << ',' << fmt(map.values[idx]) << ',';
        if (map.spec.threshold) os << static_cast<int>(map.mask[idx]);
        os << '\n';
    }
}

inline void staircase_csv(const std::vector<StaircasePoint>& points, std::ostream& os) {
    os << "g,k_star\n";
    for (const auto& pt : points) {
        os << fmt(pt.g) << ',';
        if (!pt.cap_exhausted) os << pt.k_star;
        os << '\n';
    }
}

inline void crossings_csv(const std::vector<CrossingEntry>& table, std::ostream& os) {
    os << "k,g_exact,g_pert\n";
    for (const auto& e : table) {
        os << e.k << ',' << fmt(e.g_exact) << ',' << fmt(e.g_pert) << '\n';
    }
}

struct PerturbRow {
    int k = 0;
    double e_exact = 0.0;
    double e_pert = 0.0;
    bool valid_regime = false;
};

inline void perturb_csv(const std::vector<PerturbRow>& rows, std::ostream& os) {
    os << "k,e_exact,e_pert,valid_regime\n";
    for (const auto& r : rows) {
        os << r.k << ',' << fmt(r.e_exact) << ',' << fmt(r.e_pert) << ','
           << (r.valid_regime ? 1 : 0) << '\n';
    }
}

// ------------------------------- JSON ---------------------------------------

inline void block_json(const ModelParams& p, const BlockMatrix& block, std::ostream& os) {
    const auto labels = basis_labels(p, block.k);
    os << "{\"schema_version\":" << kSchemaVersion << ",\"m\":" << p.atoms
       << ",\"g\":" << jnum(p.coupling) << ",\"eta\":" << jnum(p.freq_ratio)
       << ",\"k\":" << block.k << ",\"dim\":" << block.dim()
       << ",\"diag\":" << jarray(block.diag) << ",\"sub\":" << jarray(block.sub)
       << ",\"labels\":[";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) os << ',';
        os << "[" << labels[i].photons << "," << jnum(labels[i].spin_z) << "]";
    }
    os << "]}\n";
}

inline void ground_json(const GroundStateResult& gs, std::ostream& os) {
    const DickeWeights w = dicke_weights(gs);
    os << "{\"schema_version\":" << kSchemaVersion << ",\"m\":" << gs.params.atoms
       << ",\"g\":" << jnum(gs.params.coupling)
       << ",\"eta\":" << jnum(gs.params.freq_ratio) << ",\"k_star\":" << gs.k_star
       << ",\"energy\":" << jnum(gs.energy)
       << ",\"scanned_k_max\":" << gs.scanned_k_max
       << ",\"coeffs\":" << jarray(gs.coeffs)
       << ",\"weights\":" << jarray(w.weights) << "}\n";
}

inline void protocol_json(const GroundStateResult& gs, const ProtocolReport& r,
                          std::ostream& os) {
    os << "{\"schema_version\":" << kSchemaVersion << ",\"m\":" << gs.params.atoms
       << ",\"g\":" << jnum(gs.params.coupling)
       << ",\"eta\":" << jnum(gs.params.freq_ratio) << ",\"samples\":" << r.samples
       << ",\"seed\":" << r.seed << ",\"k_star\":" << r.k_star
       << ",\"successes\":" << r.successes
       << ",\"empirical_rate\":" << jnum(r.empirical_rate)
       << ",\"theoretical_rate\":" << jnum(r.theoretical_rate)
       << ",\"mean_attempts\":" << jnum(r.mean_attempts)
       << ",\"impossible\":" << (r.impossible ? "true" : "false") << "}\n";
}

inline void comparison_json(const oracle::BackendComparison& cmp, std::ostream& os) {
    os << "{\"schema_version\":" << kSchemaVersion << ",\"m\":" << cmp.atoms
       << ",\"n_max\":" << cmp.n_max << ",\"g\":" << jnum(cmp.g)
       << ",\"eta\":" << jnum(cmp.eta) << ",\"k_star\":" << cmp.k_star
       << ",\"block_scan\":" << jnum(cmp.block_scan)
       << ",\"dense\":" << jnum(cmp.dense) << ",\"qubit\":" << jnum(cmp.qubit)
       << ",\"max_pairwise_diff\":" << jnum(cmp.max_pairwise_diff)
       << ",\"cutoff_safe\":" << (cmp.cutoff_safe ? "true" : "false") << "}\n";
}

inline void sweep_json(const RegionMap& map, std::ostream& os) {
    const auto& s = map.spec;
    const char* quantity = s.quantity == SweepQuantity::kstar    ? "k_star"
                           : s.quantity == SweepQuantity::weight ? "weight"
                                                                 : "energy";
    os << "{\"schema_version\":" << kSchemaVersion << ",\"m\":" << s.atoms
       << ",\"quantity\":\"" << quantity << "\"";
    if (s.quantity == SweepQuantity::weight) os << ",\"weight_n\":" << s.weight_index;
    os << ",\"g_axis\":{\"min\":" << jnum(s.g_axis.lo) << ",\"max\":" << jnum(s.g_axis.hi)
       << ",\"steps\":" << s.g_axis.steps
       << ",\"log\":" << (s.g_axis.log_spaced ? "true" : "false") << "}"
       << ",\"eta_axis\":{\"min\":" << jnum(s.eta_axis.lo)
       << ",\"max\":" << jnum(s.eta_axis.hi) << ",\"steps\":" << s.eta_axis.steps
       << ",\"log\":" << (s.eta_axis.log_spaced ? "true" : "false") << "}";
    if (s.threshold) os << ",\"threshold\":" << jnum(*s.threshold);
    os << ",\"g_values\":" << jarray(map.g_values)
       << ",\"eta_values\":" << jarray(map.eta_values)
       << ",\"values\":" << jarray(map.values) << ",\"exhausted\":[";
    for (std::size_t i = 0; i < map.exhausted.size(); ++i) {
        if (i) os << ',';
        os << static_cast<int>(map.exhausted[i]);
    }
    os << "],\"mask\":[";
    for (std::size_t i = 0; i < map.mask.size(); ++i) {
        if (i) os << ',';
        os << static_cast<int>(map.mask[i]);
    }
    os << "],\"area_fraction\":" << jnum(map.area_fraction) << "}\n";
}

inline void staircase_json(int atoms, double eta,
                           const std::vector<StaircasePoint>& points, std::ostream& os) {
    os << "{\"schema_version\":" << kSchemaVersion << ",\"m\":" << atoms
       << ",\"eta\":" << jnum(eta) << ",\"points\":[";
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i) os << ',';
        os << "{\"g\":" << jnum(points[i].g) << ",\"k_star\":";
        if (points[i].cap_exhausted) {
            os << "null";
        } else {
            os << points[i].k_star;
        }
        os << "}";
    }
    os << "]}\n";
}

inline void crossings_json(int atoms, double eta, const std::vector<CrossingEntry>& table,
                           std::ostream& os) {
    os << "{\"schema_version\":" << kSchemaVersion << ",\"m\":" << atoms
       << ",\"eta\":" << jnum(eta) << ",\"entries\":[";
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (i) os << ',';
        os << "{\"k\":" << table[i].k << ",\"g_exact\":" << jnum(table[i].g_exact)
           << ",\"g_pert\":" << jnum(table[i].g_pert) << "}";
    }
    os << "]}\n";
}

inline void perturb_json(const ModelParams& p, const std::vector<PerturbRow>& rows,
                         std::ostream& os) {
    os << "{\"schema_version\":" << kSchemaVersion << ",\"m\":" << p.atoms
       << ",\"g\":" << jnum(p.coupling) << ",\"eta\":" << jnum(p.freq_ratio)
       << ",\"rows\":[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) os << ',';
        os << "{\"k\":" << rows[i].k << ",\"e_exact\":" << jnum(rows[i].e_exact)
           << ",\"e_pert\":" << jnum(rows[i].e_pert)
           << ",\"valid_regime\":" << (rows[i].valid_regime ? "true" : "false") << "}";
    }
    os << "]}\n";
}

// ------------------------------ files ---------------------------------------

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << content;
    if (!os) throw std::runtime_error("write failed: " + path);
}

}  // namespace tc::io
