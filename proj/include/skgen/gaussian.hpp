#pragma once

// Closed forms for the Rayleigh-excitation Gaussian source: key rates,
// on-off capacity and duty cycles, minimum energy per key bit, the
// three-region reliability exponent, and finite-block key energy.
// Rates and exponents in nats; SNRs linear; energies normalized by the
// noise power.

#include <cstdint>

namespace skgen::gaussian {

struct System {
    double snr_a = 0.0;        // gamma_a, linear
    double snr_b = 0.0;        // gamma_b, linear
    double noise_power = 1.0;  // sigma^2 reference scale

    static System symmetric(double snr, double noise_power = 1.0) {
        return {snr, snr, noise_power};
    }
    bool is_symmetric() const { return snr_a == snr_b; }
    void validate() const;  // throws std::domain_error
};

// SNR of the single-channel model that reproduces the two-way sounding
// statistics: (1/ga + 1/gb + 1/(ga gb))^-1, or g^2/(1+2g) when symmetric.
double equivalent_snr(const System& sys);
double equivalent_snr(double snr);  // symmetric shorthand

// Secret key rate log(1 + equivalent_snr) of a constant excitation signal.
double key_rate(const System& sys);
double key_rate(double snr);

struct EquivalentChannel {
    double gain;         // beta in [0,1)
    double noise_power;  // E|Z|^2
    double snr;          // gain^2 E|X_a|^2 / noise_power
};

EquivalentChannel equivalent_channel(const System& sys);

// Duty-cycled excitation: active a fraction `duty` of the time at SNR
// budget/duty.
struct OnOffSignal {
    double duty;    // lambda in (0,1]
    double on_snr;  // budget / duty

    static OnOffSignal for_budget(double snr_budget, double duty) {
        return {duty, snr_budget / duty};
    }
};

// The SNR where rate-per-SNR peaks (the tangent-from-origin point of the
// key-rate curve): unique positive root of key_rate(g) = g * key_rate'(g).
double threshold_snr();

struct CapacityPoint {
    double capacity;  // C_K(snr), nats
    double duty;      // optimal lambda_c = min(snr / threshold_snr, 1)
};

CapacityPoint capacity(double snr);

// threshold_snr * log 2 / key_rate(threshold_snr); also the infimum over
// SNR of snr * log 2 / capacity(snr).
double min_energy_per_key_bit();

// Reliability exponent of a constant excitation signal; continuous across
// the three rate regions.
double reliability_exponent(double key_rate_nats, double snr);

// 1, 2 or 3: high-rate (zero exponent), medium, and low-rate regions. With
// equivalent SNR below 1 the low-rate region is empty.
int reliability_region(double key_rate_nats, double snr);

struct OnOffExponent {
    double value;  // best lambda * E_R(r/lambda, snr/lambda)
    double duty;   // maximizing lambda
};

OnOffExponent onoff_reliability_exponent(double key_rate_nats, double snr);

// Gallager function of the continuous model under a constant signal:
// rho log(pi sigma_{a|b}^2) + (1+rho) log(1+rho), with noise power 1.
double e0(double rho, double snr);

struct FiniteBlockPoint {
    bool feasible;
    double energy;              // snr * block_length (per noise power)
    std::int64_t block_length;  // smallest n meeting the reliability target
};

// Smallest block length at this SNR such that
// n * E_R(log2 * key_bits / n, snr) >= log(1/epsilon), with the on-off
// exponent substituted when requested. Block length capped at 10^7.
FiniteBlockPoint finite_block_point(double key_bits, double epsilon, double snr, bool on_off);

struct FiniteBlockResult {
    double energy;
    std::int64_t block_length;
    double snr;
};

// Minimizes snr * n over a log-spaced SNR grid in [1e-3, 10] (400 points).
// Throws infeasible_error when no grid point admits a feasible block length.
FiniteBlockResult finite_block_energy(double key_bits, double epsilon, bool on_off);

}  // namespace skgen::gaussian
