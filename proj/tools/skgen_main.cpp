// skgen: secret-key capacities, reliability/secrecy exponents, key energy,
// and a random-binning protocol simulator for excited-source key generation.
//
// Subcommands: capacity, energy, exponents, tradeoff, simulate.
// Exit codes: 0 success, 2 usage error, 3 infeasible or over a size cap.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "skgen/binning.hpp"
#include "skgen/dsbs.hpp"
#include "skgen/gaussian.hpp"
#include "skgen/numeric.hpp"
#include "skgen/tables.hpp"

namespace {

using skgen::tables::ModelKind;
using skgen::tables::SweepSpec;
using skgen::tables::Table;
using skgen::tables::Units;

constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;

struct CommonFlags {
    std::string model = "gaussian";
    std::string units = "nats";
    std::string out_path;  // empty = stdout
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_model = true) {
    if (with_model)
        cmd->add_option("--model", flags.model, "Source model: gaussian or dsbs")
            ->check(CLI::IsMember({"gaussian", "dsbs"}));
    cmd->add_option("--units", flags.units, "Rate/exponent units for I/O columns")
        ->check(CLI::IsMember({"nats", "bits"}));
    cmd->add_option("--out", flags.out_path, "Output path (default stdout)");
}

ModelKind model_kind(const CommonFlags& f) {
    return f.model == "dsbs" ? ModelKind::dsbs : ModelKind::gaussian;
}

Units units_of(const CommonFlags& f) { return f.units == "bits" ? Units::bits : Units::nats; }

// "start:stop:points[:log|lin]"
SweepSpec parse_sweep(const std::string& text) {
    SweepSpec spec;
    spec.log_scale = false;
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        const auto next = text.find(':', pos);
        parts.push_back(text.substr(pos, next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (parts.size() < 3 || parts.size() > 4)
        throw CLI::ValidationError("sweep", "expected start:stop:points[:log|lin]");
    try {
        spec.start = std::stod(parts[0]);
        spec.stop = std::stod(parts[1]);
        spec.points = std::stoi(parts[2]);
    } catch (const std::exception&) {
        throw CLI::ValidationError("sweep", "non-numeric sweep bounds");
    }
    if (parts.size() == 4) {
        if (parts[3] == "log")
            spec.log_scale = true;
        else if (parts[3] != "lin")
            throw CLI::ValidationError("sweep", "scale must be 'log' or 'lin'");
    }
    spec.validate();
    return spec;
}

// Scalar --x or swept --x-sweep; exactly one may be present, with a default
// sweep when neither is given and allow_default is set.
struct AxisFlags {
    std::optional<double> scalar;
    std::optional<std::string> sweep_text;

    std::vector<double> values(const SweepSpec& fallback) const {
        if (scalar && sweep_text)
            throw CLI::ValidationError("axis", "give either a scalar or a sweep, not both");
        if (scalar) return {*scalar};
        if (sweep_text) return parse_sweep(*sweep_text).values();
        return fallback.values();
    }
    bool specified() const { return scalar.has_value() || sweep_text.has_value(); }
};

std::vector<double> snr_axis(const AxisFlags& lin, const AxisFlags& db, const SweepSpec& fallback) {
    if (lin.specified() && db.specified())
        throw CLI::ValidationError("snr", "give the SNR either linear or in dB, not both");
    if (db.specified()) {
        // dB endpoints; a linear sweep in dB is log-spaced in linear SNR
        if (db.scalar) return {std::pow(10.0, *db.scalar / 10.0)};
        auto spec = parse_sweep(*db.sweep_text);
        auto grid = spec.values();
        for (double& g : grid) g = std::pow(10.0, g / 10.0);
        return grid;
    }
    return lin.values(fallback);
}

void emit(const CommonFlags& flags, const Table& table) {
    if (flags.out_path.empty()) {
        skgen::tables::write_csv(std::cout, table);
        return;
    }
    std::ofstream out(flags.out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + flags.out_path);
    skgen::tables::write_csv(out, table);
}

void emit_text(const CommonFlags& flags, const std::string& text) {
    if (flags.out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(flags.out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + flags.out_path);
    out << text << "\n";
}

const SweepSpec kDefaultSnrSweep{1e-2, 10.0, 200, true};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Secret-key generation analysis for excited sources"};
    app.require_subcommand(1);

    // ---- capacity ----
    CommonFlags cap_flags;
    AxisFlags cap_snr, cap_snr_db;
    auto* cap = app.add_subcommand("capacity", "Constant vs duty-cycled key rate sweep");
    add_common(cap, cap_flags);
    cap->add_option("--snr", cap_snr.scalar, "Linear SNR");
    cap->add_option("--snr-sweep", cap_snr.sweep_text, "start:stop:points[:log|lin]");
    cap->add_option("--snr-db", cap_snr_db.scalar, "SNR in dB");
    cap->add_option("--snr-db-sweep", cap_snr_db.sweep_text, "dB sweep");

    // ---- energy ----
    CommonFlags en_flags;
    AxisFlags en_snr, en_snr_db;
    std::optional<double> en_bits;
    std::optional<double> en_eps;
    auto* en = app.add_subcommand("energy", "Energy per key bit and finite-block key energy");
    add_common(en, en_flags);
    en->add_option("--snr", en_snr.scalar, "Linear SNR");
    en->add_option("--snr-sweep", en_snr.sweep_text, "start:stop:points[:log|lin]");
    en->add_option("--snr-db", en_snr_db.scalar, "SNR in dB");
    en->add_option("--snr-db-sweep", en_snr_db.sweep_text, "dB sweep");
    en->add_option("--b-key", en_bits, "Key size in bits (enables finite-block columns)");
    en->add_option("--epsilon", en_eps, "Key disagreement budget");

    // ---- exponents ----
    CommonFlags ex_flags;
    AxisFlags ex_snr, ex_snr_db, ex_rate;
    bool ex_onoff = false;
    auto* ex = app.add_subcommand("exponents", "Reliability exponent sweeps with region labels");
    add_common(ex, ex_flags);
    ex->add_option("--r-sk", ex_rate.scalar, "Secret key rate (in --units)");
    ex->add_option("--r-sk-sweep", ex_rate.sweep_text, "start:stop:points[:log|lin]");
    ex->add_option("--snr", ex_snr.scalar, "Linear SNR");
    ex->add_option("--snr-sweep", ex_snr.sweep_text, "start:stop:points[:log|lin]");
    ex->add_option("--snr-db", ex_snr_db.scalar, "SNR in dB");
    ex->add_option("--snr-db-sweep", ex_snr_db.sweep_text, "dB sweep");
    ex->add_flag("--onoff", ex_onoff, "Add duty-cycled exponent columns");

    // ---- tradeoff ----
    CommonFlags tr_flags;
    AxisFlags tr_rsk, tr_rm;
    double tr_theta = 0.01;
    double tr_w = 0.3;
    auto* tr = app.add_subcommand("tradeoff", "Binary-source E_R / E_S tradeoff vs message rate");
    add_common(tr, tr_flags, /*with_model=*/false);
    tr->add_option("--theta", tr_theta, "Crossover Pr(Y_a != Y_b)")->check(CLI::Range(0.0, 0.5));
    tr->add_option("--w", tr_w, "Eavesdropper crossover Pr(Y_a != Y_e)");
    tr->add_option("--r-sk", tr_rsk.scalar, "Secret key rate (in --units)");
    tr->add_option("--r-sk-sweep", tr_rsk.sweep_text, "start:stop:points[:log|lin]");
    tr->add_option("--r-m", tr_rm.scalar, "Public message rate (in --units)");
    tr->add_option("--r-m-sweep", tr_rm.sweep_text, "start:stop:points[:log|lin]");

    // ---- simulate ----
    CommonFlags sim_flags;
    int sim_n = 8;
    double sim_rsk = 0.2, sim_rm = 0.6, sim_theta = 0.1, sim_w = 0.5;
    std::uint64_t sim_trials = 10000, sim_seed = 1;
    bool sim_exact = false;
    auto* sim = app.add_subcommand("simulate", "Random-binning protocol Monte-Carlo run (JSON)");
    add_common(sim, sim_flags, /*with_model=*/false);
    sim->add_option("--n", sim_n, "Block length")->check(CLI::Range(1, 24));
    sim->add_option("--r-sk", sim_rsk, "Secret key rate (in --units)");
    sim->add_option("--r-m", sim_rm, "Public message rate (in --units)");
    sim->add_option("--theta", sim_theta, "Source crossover")->check(CLI::Range(0.0, 0.5));
    sim->add_option("--w", sim_w, "Eavesdropper crossover");
    sim->add_option("--trials", sim_trials, "Monte-Carlo trials");
    sim->add_option("--seed", sim_seed, "Reproducibility seed");
    sim->add_flag("--exact", sim_exact, "Also print exact error probabilities");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;  // --help exits cleanly, bad flags mean usage error
    }

    try {
        if (cap->parsed()) {
            emit(cap_flags, skgen::tables::capacity_table(
                                model_kind(cap_flags),
                                snr_axis(cap_snr, cap_snr_db, kDefaultSnrSweep),
                                units_of(cap_flags)));
        } else if (en->parsed()) {
            emit(en_flags, skgen::tables::energy_table(
                               model_kind(en_flags),
                               snr_axis(en_snr, en_snr_db, kDefaultSnrSweep), en_bits, en_eps));
        } else if (ex->parsed()) {
            const SweepSpec default_rate{0.01, 1.0, 50, false};
            emit(ex_flags, skgen::tables::exponents_table(
                               model_kind(ex_flags), ex_rate.values(default_rate),
                               snr_axis(ex_snr, ex_snr_db, kDefaultSnrSweep), ex_onoff,
                               units_of(ex_flags)));
        } else if (tr->parsed()) {
            const bool bits = units_of(tr_flags) == Units::bits;
            const double unit = bits ? 1.0 : skgen::kLn2;  // paper defaults are in bits
            const SweepSpec default_rm{0.01 * unit, 1.2 * unit, 100, false};
            const auto rsk = tr_rsk.specified() ? tr_rsk.values(default_rm)
                                                : std::vector<double>{0.2 * unit};
            emit(tr_flags, skgen::tables::tradeoff_table(tr_theta, tr_w, rsk,
                                                         tr_rm.values(default_rm),
                                                         units_of(tr_flags)));
        } else if (sim->parsed()) {
            const bool bits = units_of(sim_flags) == Units::bits;
            const double rsk = bits ? skgen::bits_to_nats(sim_rsk) : sim_rsk;
            const double rm = bits ? skgen::bits_to_nats(sim_rm) : sim_rm;
            const auto code = skgen::binning::generate_code(sim_n, rsk, rm, sim_seed);
            const auto report = skgen::binning::monte_carlo_run(code, sim_theta, sim_w,
                                                                sim_trials, sim_seed);
            // analytic exponents for the same operating point ride along as
            // extra fields next to the fixed simulator schema
            auto j = nlohmann::json::parse(skgen::binning::to_json(report));
            if (sim_theta > 0.0)
                j["analytic_e_r_nats"] = skgen::bits_to_nats(
                    skgen::dsbs::reliability_exponent_message_rate(skgen::nats_to_bits(rm),
                                                                   sim_theta));
            else
                j["analytic_e_r_nats"] = nullptr;  // noiseless source
            j["analytic_e_s_nats"] = skgen::bits_to_nats(
                skgen::dsbs::secrecy_exponent(skgen::nats_to_bits(rsk + rm), sim_w));
            if (sim_exact) {
                const auto exact = skgen::binning::exact_error_probability(code, sim_theta);
                j["exact_error"] = exact.key_mismatch;
                j["exact_sequence_error"] = exact.sequence_error;
            }
            emit_text(sim_flags, j.dump(2));
        }
    } catch (const skgen::infeasible_error& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::length_error& e) {
        std::cerr << "size cap: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
