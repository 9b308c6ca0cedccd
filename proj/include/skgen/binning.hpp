#pragma once

// Executable random-binning key agreement protocol over binary sources:
// seeded key/message bin assignments, maximum-likelihood reconciliation,
// exact brute-force error and leakage evaluation at small block lengths,
// and Monte-Carlo estimation at moderate ones. Rates in nats.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace skgen::binning {

inline constexpr int kMaxMaterializedBlock = 24;
inline constexpr int kMaxExactErrorBlock = 14;
inline constexpr int kMaxLeakageCorrelatedBlock = 10;
inline constexpr int kMaxLeakagePublicOnlyBlock = 20;

struct BinningCode {
    int block_length = 0;       // n
    double key_rate = 0.0;      // R_SK, nats
    double message_rate = 0.0;  // R_M, nats
    std::uint64_t seed = 0;
    std::uint64_t key_bins = 1;  // floor(e^{n R_SK}), at least 1
    std::uint64_t msg_bins = 1;  // floor(e^{n R_M}), at least 1
    std::vector<std::uint32_t> key_map;  // x -> key bin, size 2^n
    std::vector<std::uint32_t> msg_map;  // x -> message bin

    std::uint32_t num_sequences() const { return 1u << block_length; }
};

// Two independent uniform binnings derived deterministically from the seed
// (separate hash streams). Throws std::length_error above the
// materialization cap.
BinningCode generate_code(int block_length, double key_rate, double message_rate,
                          std::uint64_t seed);

// ML estimate of Alice's sequence within the announced message bin: minimum
// Hamming distance to the observation (theta < 1/2), ties to the smallest
// sequence value. Empty bin -> nullopt (counted as an error by callers).
std::optional<std::uint32_t> ml_decode(const BinningCode& code, std::uint32_t message_bin,
                                       std::uint32_t observed, double theta);

struct ErrorProbabilities {
    double key_mismatch;    // exact Pr(K_a != K_b)
    double sequence_error;  // exact Pr(X_a != decoded X_a)
};

// Exhaustive evaluation over all (x_a, y_b) pairs for the fixed code under
// the uniform-marginal DSBS(theta) source; pattern probabilities come from
// a per-weight table.
ErrorProbabilities exact_error_probability(const BinningCode& code, double theta);

// Ensemble bound on the sequence-error probability:
// min over a rho grid of |M|^{-rho} * exp(n * E0(rho)) for the DSBS model.
double gallager_bound(int block_length, std::uint64_t msg_bins, double theta,
                      int rho_grid_points = 200);

struct EnsembleResult {
    double mean_sequence_error;
    double std_error;  // standard error of the mean over codes
    double bound;
};

// Averages the exact sequence-error probability over seeded codes and
// checks it against the ensemble bound (within three standard errors);
// violation throws std::logic_error since the bound is unconditional.
EnsembleResult ensemble_error_check(int block_length, double message_rate, double theta,
                                    int num_codes, std::uint64_t seed);

// Exact I(K_a; Y_e^n, Phi) in nats for the fixed code, with Eve's sequence
// correlated through a BSC(eve_crossover); at crossover 1/2 Eve's channel
// output is useless and the computation reduces to I(K_a; Phi).
double exact_leakage(const BinningCode& code, double eve_crossover);

// H(K_a) in nats under the uniform source, for key-uniformity checks.
double key_entropy(const BinningCode& code);

struct SimReport {
    int block_length;
    double key_rate, message_rate;  // nats
    double theta, eve_crossover;
    std::uint64_t trials, seed;
    double error_estimate;       // raw disagreement frequency
    double error_ci_halfwidth;   // Wilson 95% half-width
    std::optional<double> leakage;  // nats, exact enumeration only
    bool leakage_exact;
    double empirical_exponent;  // -(1/n) log(error_estimate); +inf when zero errors
    double bound;               // gallager_bound at the same parameters
};

// Seeded i.i.d. trials with per-trial streams keyed by (seed, trial index)
// so any evaluation order gives identical output. Leakage is filled in by
// exact enumeration when the block length permits, otherwise left empty —
// never estimated from samples.
SimReport monte_carlo_run(const BinningCode& code, double theta, double eve_crossover,
                          std::uint64_t trials, std::uint64_t seed);

// Fixed-schema JSON: n, r_sk_nats, r_m_nats, theta, w, trials, seed,
// error_estimate, error_ci_halfwidth, leakage_nats, leakage_exact,
// empirical_exponent, gallager_bound.
std::string to_json(const SimReport& report);

}  // namespace skgen::binning
