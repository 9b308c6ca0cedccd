#include "skgen/binning.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "skgen/numeric.hpp"
#include "skgen/rng.hpp"

namespace skgen::binning {

namespace {

constexpr std::uint64_t kKeyStream = 0x6b65795f62696e73ULL;  // "key_bins"
constexpr std::uint64_t kMsgStream = 0x6d73675f62696e73ULL;  // "msg_bins"
constexpr std::uint64_t kTrialStream = 0x747269616c735f5fULL;

void check_theta(double theta) {
    if (theta < 0.0 || theta > 0.5) throw std::domain_error("theta must be in [0, 1/2]");
}

std::uint64_t bin_count(int block_length, double rate) {
    if (rate < 0.0) throw std::domain_error("rates must be nonnegative");
    const double raw = std::floor(std::exp(block_length * rate));
    return raw < 1.0 ? 1 : static_cast<std::uint64_t>(raw);
}

// theta^k (1-theta)^(n-k) for k = 0..n, with 0^0 = 1 so theta = 0 only
// keeps the zero-weight pattern.
std::vector<double> pattern_weight_table(int n, double theta) {
    std::vector<double> w(n + 1);
    for (int k = 0; k <= n; ++k)
        w[k] = std::pow(theta, k) * std::pow(1.0 - theta, n - k);
    return w;
}

int hamming(std::uint32_t a, std::uint32_t b) { return std::popcount(a ^ b); }

}  // namespace

BinningCode generate_code(int block_length, double key_rate, double message_rate,
                          std::uint64_t seed) {
    if (block_length < 1) throw std::domain_error("block length must be at least 1");
    if (block_length > kMaxMaterializedBlock)
        throw std::length_error("block length exceeds the materialized-map cap of 24");
    BinningCode code;
    code.block_length = block_length;
    code.key_rate = key_rate;
    code.message_rate = message_rate;
    code.seed = seed;
    code.key_bins = bin_count(block_length, key_rate);
    code.msg_bins = bin_count(block_length, message_rate);
    const std::uint32_t total = code.num_sequences();
    code.key_map.resize(total);
    code.msg_map.resize(total);
    for (std::uint32_t x = 0; x < total; ++x) {
        code.key_map[x] =
            static_cast<std::uint32_t>(reduce_to_range(keyed_hash(seed, kKeyStream, x), code.key_bins));
        code.msg_map[x] =
            static_cast<std::uint32_t>(reduce_to_range(keyed_hash(seed, kMsgStream, x), code.msg_bins));
    }
    return code;
}

std::optional<std::uint32_t> ml_decode(const BinningCode& code, std::uint32_t message_bin,
                                       std::uint32_t observed, double theta) {
    if (theta <= 0.0 || theta > 0.5) throw std::domain_error("theta must be in (0, 1/2]");
    if (message_bin >= code.msg_bins) throw std::domain_error("message bin out of range");
    int best_dist = code.block_length + 1;
    std::optional<std::uint32_t> best;
    const std::uint32_t total = code.num_sequences();
    for (std::uint32_t x = 0; x < total; ++x) {
        if (code.msg_map[x] != message_bin) continue;
        const int d = hamming(x, observed);
        if (d < best_dist) {  // strict: ties keep the smaller sequence
            best_dist = d;
            best = x;
        }
    }
    return best;
}

ErrorProbabilities exact_error_probability(const BinningCode& code, double theta) {
    check_theta(theta);
    const int n = code.block_length;
    if (n > kMaxExactErrorBlock)
        throw std::length_error("exact error enumeration is capped at block length 14");
    const std::uint32_t total = code.num_sequences();
    const auto weight = pattern_weight_table(n, theta);
    const double uniform = 1.0 / static_cast<double>(total);
    std::vector<int> best_dist(code.msg_bins);
    std::vector<std::uint32_t> best_seq(code.msg_bins);
    double p_seq = 0.0, p_key = 0.0;
    for (std::uint32_t yb = 0; yb < total; ++yb) {
        std::fill(best_dist.begin(), best_dist.end(), n + 1);
        for (std::uint32_t x = 0; x < total; ++x) {
            const int d = hamming(x, yb);
            const auto bin = code.msg_map[x];
            if (d < best_dist[bin]) {
                best_dist[bin] = d;
                best_seq[bin] = x;
            }
        }
        for (std::uint32_t xa = 0; xa < total; ++xa) {
            const double p = uniform * weight[hamming(xa, yb)];
            if (p == 0.0) continue;
            const std::uint32_t decoded = best_seq[code.msg_map[xa]];
            if (decoded != xa) {
                p_seq += p;
                if (code.key_map[decoded] != code.key_map[xa]) p_key += p;
            }
        }
    }
    return {p_key, p_seq};
}

double gallager_bound(int block_length, std::uint64_t msg_bins, double theta,
                      int rho_grid_points) {
    check_theta(theta);
    if (rho_grid_points < 2) throw std::domain_error("rho grid needs at least 2 points");
    auto log_bound = [&](double rho) {
        const double e0 = theta == 0.0
                              ? 0.0
                              : (1.0 + rho) * std::log(std::pow(theta, 1.0 / (1.0 + rho)) +
                                                       std::pow(1.0 - theta, 1.0 / (1.0 + rho)));
        return -rho * std::log(static_cast<double>(msg_bins)) + block_length * e0;
    };
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < rho_grid_points; ++i)
        best = std::min(best, log_bound(static_cast<double>(i) / (rho_grid_points - 1)));
    return std::exp(best);
}

EnsembleResult ensemble_error_check(int block_length, double message_rate, double theta,
                                    int num_codes, std::uint64_t seed) {
    if (num_codes < 2) throw std::domain_error("ensemble check needs at least 2 codes");
    std::vector<double> errors(num_codes);
    std::uint64_t msg_bins = 0;
    for (int c = 0; c < num_codes; ++c) {
        // key binning does not enter Pr(E_x); rate 0 keeps the codes cheap
        const auto code = generate_code(block_length, 0.0, message_rate, seed + c);
        msg_bins = code.msg_bins;
        errors[c] = exact_error_probability(code, theta).sequence_error;
    }
    double mean = 0.0;
    for (double e : errors) mean += e;
    mean /= num_codes;
    double var = 0.0;
    for (double e : errors) var += (e - mean) * (e - mean);
    var /= (num_codes - 1);
    const double std_error = std::sqrt(var / num_codes);
    const double bound = gallager_bound(block_length, msg_bins, theta);
    if (mean > bound + 3.0 * std_error)
        throw std::logic_error("ensemble-average error exceeds the Gallager bound");
    return {mean, std_error, bound};
}

namespace {

double mutual_information_from_joint(const std::vector<double>& joint, std::size_t rows,
                                     std::size_t cols) {
    std::vector<double> pr(rows, 0.0), pc(cols, 0.0);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            pr[r] += joint[r * cols + c];
            pc[c] += joint[r * cols + c];
        }
    double mi = 0.0;
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            const double p = joint[r * cols + c];
            if (p > 0.0) mi += p * std::log(p / (pr[r] * pc[c]));
        }
    return std::max(mi, 0.0);
}

double leakage_public_only(const BinningCode& code) {
    const std::size_t k = code.key_bins, m = code.msg_bins;
    std::vector<double> joint(k * m, 0.0);
    const double uniform = 1.0 / static_cast<double>(code.num_sequences());
    for (std::uint32_t x = 0; x < code.num_sequences(); ++x)
        joint[code.key_map[x] * m + code.msg_map[x]] += uniform;
    return mutual_information_from_joint(joint, k, m);
}

}  // namespace

double exact_leakage(const BinningCode& code, double eve_crossover) {
    if (eve_crossover <= 0.0 || eve_crossover > 0.5)
        throw std::domain_error("eavesdropper crossover must be in (0, 1/2]");
    if (eve_crossover == 0.5) {
        if (code.block_length > kMaxLeakagePublicOnlyBlock)
            throw std::length_error("public-message leakage enumeration is capped at block length 20");
        return leakage_public_only(code);
    }
    const int n = code.block_length;
    if (n > kMaxLeakageCorrelatedBlock)
        throw std::length_error("correlated-eavesdropper leakage is capped at block length 10");
    const std::uint32_t total = code.num_sequences();
    const std::size_t cols = static_cast<std::size_t>(code.key_bins);
    const std::size_t rows = static_cast<std::size_t>(total) * code.msg_bins;
    if (rows * cols > (std::size_t{1} << 24))
        throw std::length_error("leakage table would exceed the memory cap");
    // joint over ((y_e, phi), k)
    std::vector<double> joint(rows * cols, 0.0);
    const auto weight = pattern_weight_table(n, eve_crossover);
    const double uniform = 1.0 / static_cast<double>(total);
    for (std::uint32_t xa = 0; xa < total; ++xa) {
        const std::size_t k = code.key_map[xa];
        const std::size_t phi = code.msg_map[xa];
        for (std::uint32_t ye = 0; ye < total; ++ye) {
            const double p = uniform * weight[hamming(xa, ye)];
            joint[(static_cast<std::size_t>(ye) * code.msg_bins + phi) * cols + k] += p;
        }
    }
    return mutual_information_from_joint(joint, rows, cols);
}

double key_entropy(const BinningCode& code) {
    std::vector<double> pk(code.key_bins, 0.0);
    const double uniform = 1.0 / static_cast<double>(code.num_sequences());
    for (std::uint32_t x = 0; x < code.num_sequences(); ++x) pk[code.key_map[x]] += uniform;
    double h = 0.0;
    for (double p : pk) h += entropy_term(p);
    return h;
}

SimReport monte_carlo_run(const BinningCode& code, double theta, double eve_crossover,
                          std::uint64_t trials, std::uint64_t seed) {
    check_theta(theta);
    if (eve_crossover <= 0.0 || eve_crossover > 0.5)
        throw std::domain_error("eavesdropper crossover must be in (0, 1/2]");
    if (trials < 1) throw std::domain_error("at least one trial required");
    const int n = code.block_length;
    const std::uint32_t mask = code.num_sequences() - 1;

    // message-bin member lists, ascending so ties resolve to the smaller value
    std::vector<std::vector<std::uint32_t>> members(code.msg_bins);
    for (std::uint32_t x = 0; x < code.num_sequences(); ++x) members[code.msg_map[x]].push_back(x);

    std::uint64_t failures = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng(seed ^ kTrialStream, t);
        const std::uint32_t xa = static_cast<std::uint32_t>(rng.next_u64()) & mask;
        std::uint32_t yb = xa;
        for (int i = 0; i < n; ++i)
            if (rng.bernoulli(theta)) yb ^= (1u << i);
        const auto& bin = members[code.msg_map[xa]];
        std::uint32_t decoded = bin.front();
        int best = n + 1;
        for (std::uint32_t x : bin) {
            const int d = hamming(x, yb);
            if (d < best) {
                best = d;
                decoded = x;
            }
        }
        if (code.key_map[decoded] != code.key_map[xa]) ++failures;
    }

    const double estimate = static_cast<double>(failures) / static_cast<double>(trials);
    const double z = 1.959963984540054;  // 95% normal quantile
    const double nt = static_cast<double>(trials);
    const double wilson_halfwidth =
        z * std::sqrt(estimate * (1.0 - estimate) / nt + z * z / (4.0 * nt * nt)) /
        (1.0 + z * z / nt);

    SimReport report;
    report.block_length = n;
    report.key_rate = code.key_rate;
    report.message_rate = code.message_rate;
    report.theta = theta;
    report.eve_crossover = eve_crossover;
    report.trials = trials;
    report.seed = seed;
    report.error_estimate = estimate;
    report.error_ci_halfwidth = wilson_halfwidth;
    report.empirical_exponent = estimate > 0.0 ? -std::log(estimate) / n
                                               : std::numeric_limits<double>::infinity();
    report.bound = gallager_bound(n, code.msg_bins, theta);
    report.leakage_exact = false;
    const bool leakage_fits = eve_crossover == 0.5 ? n <= kMaxLeakagePublicOnlyBlock
                                                   : n <= kMaxLeakageCorrelatedBlock;
    if (leakage_fits) {
        report.leakage = exact_leakage(code, eve_crossover);
        report.leakage_exact = true;
    }
    return report;
}

std::string to_json(const SimReport& r) {
    nlohmann::json j;
    j["n"] = r.block_length;
    j["r_sk_nats"] = r.key_rate;
    j["r_m_nats"] = r.message_rate;
    j["theta"] = r.theta;
    j["w"] = r.eve_crossover;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["error_estimate"] = r.error_estimate;
    j["error_ci_halfwidth"] = r.error_ci_halfwidth;
    if (r.leakage.has_value())
        j["leakage_nats"] = *r.leakage;
    else
        j["leakage_nats"] = nullptr;
    j["leakage_exact"] = r.leakage_exact;
    if (std::isfinite(r.empirical_exponent))
        j["empirical_exponent"] = r.empirical_exponent;
    else
        j["empirical_exponent"] = nullptr;
    j["gallager_bound"] = r.bound;
    return j.dump(2);
}

}  // namespace skgen::binning
