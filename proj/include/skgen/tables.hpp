#pragma once

// Sweep tables behind the CLI subcommands. Internally everything runs in
// nats; the units flag converts rate and exponent columns on the way out.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace skgen::tables {

enum class Units { nats, bits };
enum class ModelKind { gaussian, dsbs };

struct SweepSpec {
    double start = 0.0;
    double stop = 0.0;
    int points = 0;
    bool log_scale = false;

    void validate() const;               // start < stop, points >= 2, log needs start > 0
    std::vector<double> values() const;  // validated grid
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

// Columns: gamma, i_k (constant signal), c_k (duty-cycled), lambda_c.
Table capacity_table(ModelKind model, const std::vector<double>& snrs, Units units);

// Columns: gamma, ebit_const, ebit_onoff (energy per key bit, both models
// normalized per noise power), and with a key size and reliability target
// the finite-block columns ekey_const, n_const, const_feasible, ekey_onoff,
// n_onoff, onoff_feasible. Infeasible rows carry inf energy, n = 0 and a
// zero flag.
Table energy_table(ModelKind model, const std::vector<double>& snrs,
                   std::optional<double> key_bits, std::optional<double> epsilon);

// Cartesian sweep over key rates and SNRs. Columns: r_sk, gamma, e_r,
// region, plus e_r_onoff and lambda_e when requested. Key-rate inputs and
// rate/exponent outputs honor the units flag.
Table exponents_table(ModelKind model, const std::vector<double>& key_rates,
                      const std::vector<double>& snrs, bool with_onoff, Units units);

// Binary-source tradeoff: columns r_sk, r_m, e_r, e_s over the cartesian
// grid (key rates x message rates, both in the chosen units).
Table tradeoff_table(double theta, double eve_crossover, const std::vector<double>& key_rates,
                     const std::vector<double>& message_rates, Units units);

// Header row then one line per row, 12 significant digits, comma-separated.
void write_csv(std::ostream& out, const Table& table);

std::string format_cell(double v);  // %.12g

}  // namespace skgen::tables
