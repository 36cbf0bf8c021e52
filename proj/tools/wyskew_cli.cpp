// Copyright 2026 The wyskew Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// wyskew: skew information, bound scans and LUR witnesses from the shell.
//
// Exit codes: 0 success, 2 parse/validation error, 3 dimension mismatch,
// 4 I/O error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <wyskew/wyskew.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitDimension = 3;
constexpr int kExitIo = 4;

constexpr int kWitnessTrials = 64;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int run_skew(const std::string &state_file,
             const std::vector<std::string> &obs_files) {
    if (obs_files.size() != 1) {
        throw wyskew::ValidationError("skew: expected exactly one --obs file");
    }
    const wyskew::DensityMatrix rho(wyskew::load_matrix_file(state_file));
    const wyskew::HermitianOperator h(wyskew::load_matrix_file(obs_files[0]));
    std::cout << wyskew::format_number(wyskew::skew_information(rho, h))
              << '\n';
    return kExitOk;
}

int run_scan(const std::string &family_name, int points,
             const std::string &out_path) {
    const auto family = wyskew::parse_family(family_name);
    if (!family) {
        throw wyskew::ValidationError("scan: unknown family '" + family_name +
                                      "' (expected fig1_bloch or fig2_spin1)");
    }
    const auto rows = wyskew::scan_family(*family, points);
    for (const auto &row : rows) {
        if (!row.audit()) {
            std::cerr << "warning: bound exceeds sum_skew at theta = "
                      << wyskew::format_number(row.theta) << '\n';
        }
    }
    if (out_path.empty() || out_path == "-") {
        wyskew::write_scan_csv(std::cout, rows);
        return kExitOk;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("scan: cannot open '" + out_path + "' for writing");
    }
    wyskew::write_scan_csv(out, rows);
    out.flush();
    if (!out) {
        throw IoError("scan: failed writing '" + out_path + "'");
    }
    return kExitOk;
}

wyskew::ObservableSet load_set(const std::vector<std::string> &files) {
    std::vector<wyskew::HermitianOperator> ops;
    ops.reserve(files.size());
    for (const auto &f : files) {
        ops.emplace_back(wyskew::load_matrix_file(f));
    }
    return wyskew::ObservableSet(std::move(ops));
}

// --obs lists Alice's observables first, then Bob's, in matching order.
int run_witness(const std::string &state_file,
                const std::vector<std::string> &obs_files,
                std::optional<double> c_a, std::optional<double> c_b,
                std::uint64_t seed) {
    if (obs_files.empty() || obs_files.size() % 2 != 0) {
        throw wyskew::ValidationError(
            "witness: set-size mismatch, pass an even number of --obs files "
            "(A_1..A_k followed by B_1..B_k)");
    }
    const auto half = static_cast<std::ptrdiff_t>(obs_files.size() / 2);
    const auto as = load_set({obs_files.begin(), obs_files.begin() + half});
    const auto bs = load_set({obs_files.begin() + half, obs_files.end()});
    const wyskew::DensityMatrix rho(wyskew::load_matrix_file(state_file));

    if (!c_a) {
        c_a = wyskew::optimal_constant(as, kWitnessTrials, seed);
    }
    if (!c_b) {
        c_b = wyskew::optimal_constant(bs, kWitnessTrials, seed);
    }
    const auto verdict = wyskew::lur_witness(rho, as, bs, *c_a, *c_b);
    std::cout << "total " << wyskew::format_number(verdict.total) << '\n'
              << "threshold " << wyskew::format_number(verdict.threshold)
              << '\n'
              << (verdict.violated ? "ENTANGLED (witness violated)"
                                   : "no violation")
              << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Wigner-Yanase skew information, uncertainty bounds and "
                 "entanglement witnesses"};
    app.require_subcommand(1);

    std::string state_file;
    std::vector<std::string> obs_files;
    std::string family;
    int points = 64;
    std::string out_path;
    std::optional<double> c_a;
    std::optional<double> c_b;
    std::uint64_t seed = 0;

    auto *skew = app.add_subcommand("skew", "Print I_rho(H) for a state and "
                                            "an observable");
    skew->add_option("--state", state_file, "State matrix (JSON)")->required();
    skew->add_option("--obs", obs_files, "Observable matrix (JSON)")
        ->required();

    auto *scan = app.add_subcommand(
        "scan", "Evaluate all bounds along a state family and write CSV");
    scan->add_option("--family", family, "fig1_bloch or fig2_spin1")
        ->required();
    scan->add_option("--points", points, "Number of theta samples in [0, 2pi)")
        ->check(CLI::Range(2, 1 << 20));
    scan->add_option("--out", out_path, "Output CSV path (stdout if omitted)");

    auto *witness = app.add_subcommand(
        "witness", "Evaluate the local uncertainty relation witness");
    witness->add_option("--state", state_file, "Bipartite state (JSON)")
        ->required();
    witness
        ->add_option("--obs", obs_files,
                     "A_1..A_k then B_1..B_k observable files (JSON)")
        ->required();
    witness->add_option("--ca", c_a, "Constant c_A (computed if omitted)");
    witness->add_option("--cb", c_b, "Constant c_B (computed if omitted)");
    witness->add_option("--seed", seed, "Seed for the constant search");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (skew->parsed()) {
            return run_skew(state_file, obs_files);
        }
        if (scan->parsed()) {
            return run_scan(family, points, out_path);
        }
        return run_witness(state_file, obs_files, c_a, c_b, seed);
    } catch (const wyskew::DimensionError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDimension;
    } catch (const IoError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const wyskew::Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    }
}
