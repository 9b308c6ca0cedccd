#include "skgen/tables.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "skgen/dsbs.hpp"
#include "skgen/gaussian.hpp"
#include "skgen/numeric.hpp"

namespace skgen::tables {

void SweepSpec::validate() const {
    if (!(start < stop)) throw std::domain_error("sweep: start must be below stop");
    if (points < 2) throw std::domain_error("sweep: at least 2 points required");
    if (log_scale && start <= 0.0) throw std::domain_error("sweep: log scale requires start > 0");
}

std::vector<double> SweepSpec::values() const {
    validate();
    std::vector<double> v(points);
    if (log_scale) {
        const double l0 = std::log(start), l1 = std::log(stop);
        for (int i = 0; i < points; ++i) v[i] = std::exp(l0 + (l1 - l0) * i / (points - 1));
    } else {
        for (int i = 0; i < points; ++i) v[i] = start + (stop - start) * i / (points - 1);
    }
    return v;
}

namespace {

double from_nats(double v, Units units) { return units == Units::bits ? nats_to_bits(v) : v; }
double to_nats(double v, Units units) { return units == Units::bits ? bits_to_nats(v) : v; }

// Constant-signal key rate in nats for either model.
double model_rate_nats(ModelKind model, double snr) {
    return model == ModelKind::gaussian ? gaussian::key_rate(snr)
                                        : bits_to_nats(dsbs::key_rate_from_snr(snr));
}

// Duty-cycled capacity in nats and the capacity-achieving duty.
std::pair<double, double> model_capacity_nats(ModelKind model, double snr) {
    if (model == ModelKind::gaussian) {
        const auto c = gaussian::capacity(snr);
        return {c.capacity, c.duty};
    }
    if (snr == 0.0) return {0.0, 0.0};
    const double gc = dsbs::threshold_snr();
    const double duty = snr >= gc ? 1.0 : snr / gc;
    return {bits_to_nats(duty * dsbs::key_rate_from_snr(snr / duty)), duty};
}

// Reliability exponent in nats; binary rates above one bit mean region 1.
double model_exponent_nats(ModelKind model, double key_rate_nats, double snr) {
    if (model == ModelKind::gaussian) return gaussian::reliability_exponent(key_rate_nats, snr);
    const double bits = nats_to_bits(key_rate_nats);
    if (bits > 1.0) return 0.0;
    return bits_to_nats(dsbs::reliability_exponent(bits, snr));
}

int model_region(ModelKind model, double key_rate_nats, double snr) {
    if (model == ModelKind::gaussian) return gaussian::reliability_region(key_rate_nats, snr);
    const double bits = nats_to_bits(key_rate_nats);
    if (bits > 1.0) return 1;
    return dsbs::reliability_region(bits, snr);
}

std::pair<double, double> model_onoff_nats(ModelKind model, double key_rate_nats, double snr) {
    if (model == ModelKind::gaussian) {
        const auto r = gaussian::onoff_reliability_exponent(key_rate_nats, snr);
        return {r.value, r.duty};
    }
    const double bits = nats_to_bits(key_rate_nats);
    if (bits > 1.0) return {0.0, 1.0};
    const auto r = dsbs::onoff_reliability_exponent(bits, snr);
    return {bits_to_nats(r.value), r.duty};
}

struct BlockSearch {
    bool feasible;
    double energy;
    std::int64_t block_length;
};

// Smallest n with n * E(key_bits * ln2 / n, snr) >= log(1/epsilon); the
// left side is nondecreasing in n, so plain binary search applies.
template <typename Exponent>
BlockSearch smallest_block(double key_bits, double epsilon, double snr, Exponent&& exponent) {
    constexpr std::int64_t cap = 10'000'000;
    const double target = std::log(1.0 / epsilon);
    auto enough = [&](std::int64_t n) {
        return n * exponent(key_bits * kLn2 / static_cast<double>(n), snr) >= target;
    };
    if (!enough(cap)) return {false, std::numeric_limits<double>::infinity(), 0};
    std::int64_t lo = 1, hi = cap;
    while (lo < hi) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (enough(mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    return {true, snr * static_cast<double>(lo), lo};
}

BlockSearch model_block(ModelKind model, double key_bits, double epsilon, double snr,
                        bool on_off) {
    if (model == ModelKind::gaussian) {
        const auto pt = gaussian::finite_block_point(key_bits, epsilon, snr, on_off);
        return {pt.feasible,
                pt.feasible ? pt.energy : std::numeric_limits<double>::infinity(),
                pt.block_length};
    }
    auto exponent = [on_off](double rate_nats, double g) {
        const double bits = nats_to_bits(rate_nats);
        if (bits > 1.0) return 0.0;
        return on_off ? bits_to_nats(dsbs::onoff_reliability_exponent(bits, g).value)
                      : bits_to_nats(dsbs::reliability_exponent(bits, g));
    };
    return smallest_block(key_bits, epsilon, snr, exponent);
}

}  // namespace

Table capacity_table(ModelKind model, const std::vector<double>& snrs, Units units) {
    Table t;
    t.header = {"gamma", "i_k", "c_k", "lambda_c"};
    for (double g : snrs) {
        const auto [ck, duty] = model_capacity_nats(model, g);
        t.rows.push_back({g, from_nats(model_rate_nats(model, g), units), from_nats(ck, units),
                          duty});
    }
    return t;
}

Table energy_table(ModelKind model, const std::vector<double>& snrs,
                   std::optional<double> key_bits, std::optional<double> epsilon) {
    if (key_bits.has_value() != epsilon.has_value())
        throw std::domain_error("finite-block energy needs both a key size and epsilon");
    Table t;
    t.header = {"gamma", "ebit_const", "ebit_onoff"};
    if (key_bits) {
        for (const char* c : {"ekey_const", "n_const", "const_feasible", "ekey_onoff", "n_onoff",
                              "onoff_feasible"})
            t.header.push_back(c);
    }
    for (double g : snrs) {
        const double rate = model_rate_nats(model, g);
        const double cap = model_capacity_nats(model, g).first;
        std::vector<double> row{
            g,
            rate > 0.0 ? g * kLn2 / rate : std::numeric_limits<double>::infinity(),
            cap > 0.0 ? g * kLn2 / cap : std::numeric_limits<double>::infinity()};
        if (key_bits) {
            for (bool on_off : {false, true}) {
                const auto b = model_block(model, *key_bits, *epsilon, g, on_off);
                row.push_back(b.energy);
                row.push_back(static_cast<double>(b.block_length));
                row.push_back(b.feasible ? 1.0 : 0.0);
            }
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table exponents_table(ModelKind model, const std::vector<double>& key_rates,
                      const std::vector<double>& snrs, bool with_onoff, Units units) {
    Table t;
    t.header = {"r_sk", "gamma", "e_r", "region"};
    if (with_onoff) {
        t.header.push_back("e_r_onoff");
        t.header.push_back("lambda_e");
    }
    for (double r : key_rates)
        for (double g : snrs) {
            const double r_nats = to_nats(r, units);
            std::vector<double> row{r, g, from_nats(model_exponent_nats(model, r_nats, g), units),
                                    static_cast<double>(model_region(model, r_nats, g))};
            if (with_onoff) {
                const auto [val, duty] = model_onoff_nats(model, r_nats, g);
                row.push_back(from_nats(val, units));
                row.push_back(duty);
            }
            t.rows.push_back(std::move(row));
        }
    return t;
}

Table tradeoff_table(double theta, double eve_crossover, const std::vector<double>& key_rates,
                     const std::vector<double>& message_rates, Units units) {
    Table t;
    t.header = {"r_sk", "r_m", "e_r", "e_s"};
    auto input_bits = [&](double v) {
        return units == Units::bits ? v : nats_to_bits(v);
    };
    auto output = [&](double bits) {
        return units == Units::bits ? bits : bits_to_nats(bits);
    };
    for (double r_sk : key_rates)
        for (double r_m : message_rates) {
            const double rm_bits = input_bits(r_m);
            const double rsk_bits = input_bits(r_sk);
            t.rows.push_back({r_sk, r_m,
                              output(dsbs::reliability_exponent_message_rate(rm_bits, theta)),
                              output(dsbs::secrecy_exponent(rsk_bits + rm_bits, eve_crossover))});
        }
    return t;
}

std::string format_cell(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_csv(std::ostream& out, const Table& table) {
    for (std::size_t i = 0; i < table.header.size(); ++i)
        out << table.header[i] << (i + 1 == table.header.size() ? "\n" : ",");
    for (const auto& row : table.rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            out << format_cell(row[i]) << (i + 1 == row.size() ? "\n" : ",");
}

}  // namespace skgen::tables
