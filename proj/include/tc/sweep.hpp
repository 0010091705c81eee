// sweep.hpp — parameter sweeps over the (g, eta) plane
//
// Every grid point is an independent ground-state solve; workers write their
// own cells by index, so results are identical for any thread count.  Points
// where the sector scan hits its cap are marked with a sentinel, never with a
// fabricated value.

#pragma once

#include "tc/dicke.hpp"
#include "tc/spectrum.hpp"

#include <cmath>
#include <cstdint>
#include <exception>
#include <limits>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

namespace tc {

struct Axis {
    double lo = 0.0;
    double hi = 0.0;
    int steps = 1;
    bool log_spaced = false;
};

inline std::vector<double> axis_values(const Axis& axis) {
    if (axis.steps < 1) throw std::invalid_argument("axis: steps must be >= 1");
    if (!(axis.lo < axis.hi)) throw std::invalid_argument("axis: need lo < hi");
    if (axis.log_spaced && !(axis.lo > 0.0)) {
        throw std::invalid_argument("axis: log spacing needs lo > 0");
    }
    std::vector<double> values(static_cast<std::size_t>(axis.steps));
    if (axis.steps == 1) {
        values[0] = axis.lo;
        return values;
    }
    if (axis.log_spaced) {
        const double l0 = std::log(axis.lo);
        const double l1 = std::log(axis.hi);
        for (int i = 0; i < axis.steps; ++i) {
            values[static_cast<std::size_t>(i)] =
                std::exp(l0 + (l1 - l0) * i / (axis.steps - 1));
        }
    } else {
        for (int i = 0; i < axis.steps; ++i) {
            values[static_cast<std::size_t>(i)] =
                axis.lo + (axis.hi - axis.lo) * i / (axis.steps - 1);
        }
    }
    return values;
}

enum class SweepQuantity { kstar, weight, energy };

struct SweepSpec {
    int atoms = 0;
    Axis g_axis;                    // linear by default
    Axis eta_axis{0.0, 0.0, 1, true};  // log-spaced by default
    SweepQuantity quantity = SweepQuantity::kstar;
    int weight_index = -1;          // target n for quantity == weight
    std::optional<double> threshold;
    ScanPolicy policy{};
    int threads = 1;
};

inline void validate(const SweepSpec& spec) {
    if (spec.atoms < 1) throw std::invalid_argument("sweep: atom count must be >= 1");
    axis_values(spec.g_axis);
    if (!(spec.eta_axis.lo > 0.0)) {
        throw std::invalid_argument("sweep: eta axis must start above 0");
    }
    axis_values(spec.eta_axis);
    if (!(spec.g_axis.lo >= 0.0)) {
        throw std::invalid_argument("sweep: coupling axis must be non-negative");
    }
    if (spec.quantity == SweepQuantity::weight &&
        (spec.weight_index < 0 || spec.weight_index > spec.atoms)) {
        throw std::invalid_argument("sweep: weight index must be in [0, M]");
    }
    if (spec.threads < 1) throw std::invalid_argument("sweep: thread count must be >= 1");
}

// Row-major, eta outer: cell (i_eta, i_g) lives at i_eta * g_steps + i_g.
struct RegionMap {
    SweepSpec spec;
    std::vector<double> g_values;
    std::vector<double> eta_values;
    std::vector<double> values;       // NaN where exhausted
    std::vector<std::uint8_t> exhausted;
    std::vector<std::uint8_t> mask;   // value >= threshold, all zero without one
    double area_fraction = 0.0;
};

inline RegionMap run_sweep(const SweepSpec& spec) {
    validate(spec);

    RegionMap map;
    map.spec = spec;
    map.g_values = axis_values(spec.g_axis);
    map.eta_values = axis_values(spec.eta_axis);

    const std::size_t n_g = map.g_values.size();
    const std::size_t total = n_g * map.eta_values.size();
    map.values.assign(total, std::numeric_limits<double>::quiet_NaN());
    map.exhausted.assign(total, 0);
    map.mask.assign(total, 0);

    auto evaluate_cell = [&](std::size_t idx) {
        const double g = map.g_values[idx % n_g];
        const double eta = map.eta_values[idx / n_g];
        const ModelParams params(spec.atoms, g, eta);
        try {
            const GroundStateResult gs = find_kstar(params, spec.policy);
            switch (spec.quantity) {
                case SweepQuantity::kstar:
                    map.values[idx] = gs.k_star;
                    break;
                case SweepQuantity::weight: {
                    const DickeWeights w = dicke_weights(gs);
                    const std::size_t n = static_cast<std::size_t>(spec.weight_index);
                    map.values[idx] = n < w.weights.size() ? w.weights[n] : 0.0;
                    break;
                }
                case SweepQuantity::energy:
                    map.values[idx] = gs.energy;
                    break;
            }
        } catch (const scan_cap_error&) {
            map.exhausted[idx] = 1;
        }
    };

    const int workers = std::min<int>(spec.threads, static_cast<int>(total));
    if (workers <= 1) {
        for (std::size_t idx = 0; idx < total; ++idx) evaluate_cell(idx);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t idx = static_cast<std::size_t>(w); idx < total;
                         idx += static_cast<std::size_t>(workers)) {
                        evaluate_cell(idx);
                    }
                } catch (...) {
                    errors[static_cast<std::size_t>(w)] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (const auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    if (spec.threshold) {
        std::size_t hits = 0;
        for (std::size_t idx = 0; idx < total; ++idx) {
            if (!map.exhausted[idx] && map.values[idx] >= *spec.threshold) {
                map.mask[idx] = 1;
                ++hits;
            }
        }
        map.area_fraction = static_cast<double>(hits) / static_cast<double>(total);
    }
    return map;
}

}  // namespace tc
