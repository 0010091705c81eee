// cli.hpp — command-line front end
//
// Exit codes: 0 success, 1 domain/runtime errors, 2 usage errors.  All output
// is deterministic for fixed inputs and seed, independent of --threads.
// Flags always win over values supplied through --config (a flat JSON object
// keyed by flag name); there is no environment-variable configuration.

#pragma once

#include "tc/dicke.hpp"
#include "tc/io.hpp"
#include "tc/model.hpp"
#include "tc/oracle.hpp"
#include "tc/spectrum.hpp"
#include "tc/sweep.hpp"

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace tc::cli {

namespace detail {

class usage_error : public std::runtime_error {
public:
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

inline const char* kHelp = R"(tcdicke — ground-state toolkit for atoms collectively coupled to a cavity mode

usage: tcdicke <command> [--flag value ...]

commands:
  block         print the tridiagonal Hamiltonian restriction of one
                excitation sector (--m --g --eta --k)
  ground        locate the global ground state: k*, energy, coefficients and
                Dicke weights (--m --g --eta [--k-max])
  staircase     tabulate k* over a coupling grid
                (--m --eta --g-min --g-max --g-steps [--k-max])
  crossings     level-crossing positions, exact and asymptotic
                (--m --eta --k-from --k-to)
  sweep         map k*, a Dicke weight, or the energy over a (g, eta) grid
                (--m --quantity k_star|weight|energy [--weight-n N]
                 --g-min --g-max --g-steps --eta-min --eta-max --eta-steps
                 [--threshold X] [--threads N] [--k-max])
  protocol      simulate the photon-measurement preparation protocol
                (--m --g --eta --samples [--seed])
  perturb       exact sector energies next to the small-eta expansion
                (--m --g --eta [--k K | --k-from A --k-to B])
  oracle-check  cross-validate the sector solver against two dense
                diagonalizations (--m --g --eta [--n-max] [--k-max])

common flags:
  --m <int>        number of atoms
  --g <real>       dimensionless coupling
  --eta <real>     atomic splitting over cavity frequency (must be > 0)
  --k-max <int>    sector-scan cap (default 8*M)
  --seed <u64>     RNG seed for protocol simulation (default 0)
  --threads <int>  worker threads for sweeps (default 1)
  --out <path>     write the report to a file instead of stdout
  --format <csv|json>
  --config <path>  JSON object of default flag values; explicit flags win
  --help
)";

struct Args {
    std::string command;
    std::map<std::string, std::string> kv;

    bool has(const std::string& key) const { return kv.count(key) > 0; }

    std::string str(const std::string& key) const { return kv.at(key); }

    long integer(const std::string& key) const {
        const std::string& s = kv.at(key);
        std::size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(s, &pos);
        } catch (const std::exception&) {
            throw usage_error("flag --" + key + " expects an integer, got '" + s + "'");
        }
        if (pos != s.size()) {
            throw usage_error("flag --" + key + " expects an integer, got '" + s + "'");
        }
        return v;
    }

    double real(const std::string& key) const {
        const std::string& s = kv.at(key);
        std::size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &pos);
        } catch (const std::exception&) {
            throw usage_error("flag --" + key + " expects a number, got '" + s + "'");
        }
        if (pos != s.size()) {
            throw usage_error("flag --" + key + " expects a number, got '" + s + "'");
        }
        return v;
    }

    std::uint64_t uint64(const std::string& key) const {
        const std::string& s = kv.at(key);
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(s, &pos);
        } catch (const std::exception&) {
            throw usage_error("flag --" + key + " expects an unsigned integer, got '" + s + "'");
        }
        if (pos != s.size()) {
            throw usage_error("flag --" + key + " expects an unsigned integer, got '" + s + "'");
        }
        return v;
    }

    void require(std::initializer_list<const char*> keys) const {
        for (const char* key : keys) {
            if (!has(key)) {
                throw usage_error(std::string("missing required flag --") + key);
            }
        }
    }
};

inline const std::map<std::string, std::set<std::string>>& allowed_flags() {
    static const std::map<std::string, std::set<std::string>> table = {
        {"block", {"m", "g", "eta", "k", "out", "format", "config"}},
        {"ground", {"m", "g", "eta", "k-max", "out", "format", "config"}},
        {"staircase",
         {"m", "eta", "g-min", "g-max", "g-steps", "k-max", "out", "format", "config"}},
        {"crossings", {"m", "eta", "k-from", "k-to", "out", "format", "config"}},
        {"sweep",
         {"m", "quantity", "weight-n", "g-min", "g-max", "g-steps", "eta-min", "eta-max",
          "eta-steps", "threshold", "threads", "k-max", "out", "format", "config"}},
        {"protocol", {"m", "g", "eta", "samples", "seed", "k-max", "out", "format", "config"}},
        {"perturb", {"m", "g", "eta", "k", "k-from", "k-to", "out", "format", "config"}},
        {"oracle-check", {"m", "g", "eta", "n-max", "k-max", "out", "format", "config"}},
    };
    return table;
}

inline Args parse(const std::vector<std::string>& argv) {
    if (argv.empty()) throw usage_error("no command given");
    Args args;
    args.command = argv[0];
    if (args.command == "--help" || args.command == "-h" || args.command == "help") {
        args.command = "help";
        return args;
    }
    const auto& table = allowed_flags();
    const auto it = table.find(args.command);
    if (it == table.end()) throw usage_error("unknown command '" + args.command + "'");

    for (std::size_t i = 1; i < argv.size(); ++i) {
        const std::string& tok = argv[i];
        if (tok == "--help" || tok == "-h") {
            args.command = "help";
            return args;
        }
        if (tok.rfind("--", 0) != 0 || tok.size() <= 2) {
            throw usage_error("expected a --flag, got '" + tok + "'");
        }
        const std::string name = tok.substr(2);
        if (!it->second.count(name)) {
            throw usage_error("unknown flag --" + name + " for command '" + args.command + "'");
        }
        if (i + 1 >= argv.size()) {
            throw usage_error("flag --" + name + " expects a value");
        }
        args.kv[name] = argv[++i];
    }

    // Config file supplies defaults only; flags already present win.
    if (args.has("config")) {
        std::ifstream is(args.str("config"));
        if (!is) throw usage_error("cannot open config file: " + args.str("config"));
        nlohmann::json cfg;
        try {
            is >> cfg;
        } catch (const nlohmann::json::exception& e) {
            throw usage_error(std::string("malformed config file: ") + e.what());
        }
        if (!cfg.is_object()) throw usage_error("config file must hold a JSON object");
        for (const auto& [key, value] : cfg.items()) {
            if (!it->second.count(key)) {
                throw usage_error("unknown config key '" + key + "' for command '" +
                                  args.command + "'");
            }
            if (args.has(key)) continue;
            if (value.is_string()) {
                args.kv[key] = value.get<std::string>();
            } else if (value.is_number_integer()) {
                args.kv[key] = std::to_string(value.get<long long>());
            } else if (value.is_number()) {
                args.kv[key] = io::fmt(value.get<double>());
            } else if (value.is_boolean()) {
                args.kv[key] = value.get<bool>() ? "1" : "0";
            } else {
                throw usage_error("config key '" + key + "' has an unsupported type");
            }
        }
    }
    return args;
}

inline std::string format_of(const Args& args, const std::string& fallback) {
    const std::string f = args.has("format") ? args.str("format") : fallback;
    if (f != "csv" && f != "json") {
        throw usage_error("unsupported --format '" + f + "' (use csv or json)");
    }
    return f;
}

// Commands whose reports carry nested arrays emit JSON only.
inline void json_only(const Args& args, const std::string& cmd) {
    if (format_of(args, "json") != "json") {
        throw usage_error("command '" + cmd + "' emits JSON only");
    }
}

inline ScanPolicy policy_of(const Args& args) {
    ScanPolicy policy;
    if (args.has("k-max")) {
        const long cap = args.integer("k-max");
        if (cap < 1) throw usage_error("--k-max must be >= 1");
        policy.max_blocks = static_cast<int>(cap);
    }
    return policy;
}

inline ModelParams params_of(const Args& args) {
    args.require({"m", "g", "eta"});
    return ModelParams(static_cast<int>(args.integer("m")), args.real("g"),
                       args.real("eta"));
}

}  // namespace detail

inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    using detail::Args;
    using detail::usage_error;

    Args args;
    try {
        args = detail::parse(argv);
        if (args.command == "help") {
            out << detail::kHelp;
            return 0;
        }

        std::ostringstream payload;
        const std::string cmd = args.command;

        if (cmd == "block") {
            args.require({"k"});
            const ModelParams p = detail::params_of(args);
            detail::json_only(args, cmd);
            const int k = static_cast<int>(args.integer("k"));
            io::block_json(p, build_block(p, k), payload);
        } else if (cmd == "ground") {
            const ModelParams p = detail::params_of(args);
            detail::json_only(args, cmd);
            io::ground_json(find_kstar(p, detail::policy_of(args)), payload);
        } else if (cmd == "staircase") {
            args.require({"m", "eta", "g-min", "g-max", "g-steps"});
            const int m = static_cast<int>(args.integer("m"));
            const double eta = args.real("eta");
            const Axis g_axis{args.real("g-min"), args.real("g-max"),
                              static_cast<int>(args.integer("g-steps")), false};
            const auto points = staircase(m, eta, axis_values(g_axis), detail::policy_of(args));
            if (detail::format_of(args, "csv") == "csv") {
                io::staircase_csv(points, payload);
            } else {
                io::staircase_json(m, eta, points, payload);
            }
        } else if (cmd == "crossings") {
            args.require({"m", "eta", "k-from", "k-to"});
            const int m = static_cast<int>(args.integer("m"));
            const double eta = args.real("eta");
            const auto table = crossing_table(m, eta, static_cast<int>(args.integer("k-from")),
                                              static_cast<int>(args.integer("k-to")));
            if (detail::format_of(args, "csv") == "csv") {
                io::crossings_csv(table, payload);
            } else {
                io::crossings_json(m, eta, table, payload);
            }
        } else if (cmd == "sweep") {
            args.require({"m", "g-min", "g-max", "g-steps", "eta-min", "eta-max", "eta-steps"});
            SweepSpec spec;
            spec.atoms = static_cast<int>(args.integer("m"));
            spec.g_axis = {args.real("g-min"), args.real("g-max"),
                           static_cast<int>(args.integer("g-steps")), false};
            spec.eta_axis = {args.real("eta-min"), args.real("eta-max"),
                             static_cast<int>(args.integer("eta-steps")), true};
            const std::string quantity = args.has("quantity") ? args.str("quantity") : "k_star";
            if (quantity == "k_star") {
                spec.quantity = SweepQuantity::kstar;
            } else if (quantity == "weight") {
                spec.quantity = SweepQuantity::weight;
                args.require({"weight-n"});
                spec.weight_index = static_cast<int>(args.integer("weight-n"));
            } else if (quantity == "energy") {
                spec.quantity = SweepQuantity::energy;
            } else {
                throw usage_error("unsupported --quantity '" + quantity +
                                  "' (use k_star, weight or energy)");
            }
            if (args.has("threshold")) spec.threshold = args.real("threshold");
            if (args.has("threads")) spec.threads = static_cast<int>(args.integer("threads"));
            spec.policy = detail::policy_of(args);
            const RegionMap map = run_sweep(spec);
            if (detail::format_of(args, "csv") == "csv") {
                io::sweep_csv(map, payload);
            } else {
                io::sweep_json(map, payload);
            }
        } else if (cmd == "protocol") {
            args.require({"samples"});
            const ModelParams p = detail::params_of(args);
            detail::json_only(args, cmd);
            const std::uint64_t seed = args.has("seed") ? args.uint64("seed") : 0;
            const GroundStateResult gs = find_kstar(p, detail::policy_of(args));
            io::protocol_json(gs, run_protocol(gs, args.integer("samples"), seed), payload);
        } else if (cmd == "perturb") {
            const ModelParams p = detail::params_of(args);
            int k_from, k_to;
            if (args.has("k")) {
                k_from = k_to = static_cast<int>(args.integer("k"));
            } else {
                args.require({"k-from", "k-to"});
                k_from = static_cast<int>(args.integer("k-from"));
                k_to = static_cast<int>(args.integer("k-to"));
            }
            if (k_from < 0 || k_to < k_from) throw usage_error("need 0 <= k-from <= k-to");
            std::vector<io::PerturbRow> rows;
            for (int k = k_from; k <= k_to; ++k) {
                const PerturbativePrediction pred = perturbative_energy(p, k);
                rows.push_back({k, block_ground_energy(p, k), pred.energy, pred.valid_regime});
            }
            if (detail::format_of(args, "csv") == "csv") {
                io::perturb_csv(rows, payload);
            } else {
                io::perturb_json(p, rows, payload);
            }
        } else if (cmd == "oracle-check") {
            const ModelParams p = detail::params_of(args);
            detail::json_only(args, cmd);
            int n_max;
            if (args.has("n-max")) {
                n_max = static_cast<int>(args.integer("n-max"));
            } else {
                n_max = kstar_perturbative(p) + p.atoms + 10;
            }
            io::comparison_json(
                oracle::compare_backends(p.atoms, n_max, p.coupling, p.freq_ratio,
                                         detail::policy_of(args)),
                payload);
        } else {
            throw usage_error("unknown command '" + cmd + "'");
        }

        if (args.has("out")) {
            io::write_file(args.str("out"), payload.str());
        } else {
            out << payload.str();
        }
        return 0;
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << "\n\n" << detail::kHelp;
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace tc::cli
