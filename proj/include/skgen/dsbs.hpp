#pragma once

// Binary phase-quantized source: the SNR-to-crossover map, binary key
// rates, the three-region reliability exponent, the correlated-eavesdropper
// secrecy exponent, and duty-cycle optimization. Rates and exponents in
// this module are carried in BITS (the binary formulas normalize to 1);
// conversion to nats happens at module boundaries exactly once.

namespace skgen::dsbs {

struct Model {
    double theta;          // Pr(Y_a != Y_b), in [0, 1/2]
    double eve_crossover;  // Pr(Y_a != Y_e), in (0, 1/2]; 1/2 = independent
    void validate() const;
};

// theta = 1/2 - arctan(sqrt(equivalent_snr)) / pi; decreasing, range (0, 1/2].
double crossover_from_snr(double snr);

// 1 - H_B(theta) bits per symbol.
double key_rate(double theta);
double key_rate_from_snr(double snr);

// Tangent-from-origin SNR of the binary key-rate curve, the analogue of the
// Gaussian threshold: unique positive root of rate(g) = g * rate'(g).
double threshold_snr();

// Reliability exponent (bits) of a constant excitation signal at crossover
// theta, as a function of the public message rate (bits). Zero below
// H_B(theta); the parametric middle region runs up to
// H_B(sqrt(theta)/(sqrt(theta)+sqrt(1-theta))); linear in the rate beyond.
double reliability_exponent_message_rate(double message_rate_bits, double theta);

// Same exponent expressed against the key rate via the sum-rate
// substitution message_rate = 1 - key_rate. This is the extreme point of
// the reliability/secrecy tradeoff for an independent eavesdropper: the
// secrecy exponent is exactly zero at this operating point, not merely
// small. theta == 0 is reported as +infinity (noiseless source). Key rates
// above 1 bit are rejected.
double reliability_exponent(double key_rate_bits, double snr);
double reliability_exponent_theta(double key_rate_bits, double theta);

int reliability_region(double key_rate_bits, double snr);

// Secrecy exponent (bits) against an eavesdropper correlated through a
// binary symmetric channel with the given crossover. Piecewise: zero above
// H_B(w); stationary tilt in the middle; full tilt alpha = 1 at low rates.
double secrecy_exponent(double sum_rate_bits, double eve_crossover);

struct OnOffExponent {
    double value;  // bits
    double duty;
};

OnOffExponent onoff_reliability_exponent(double key_rate_bits, double snr);

}  // namespace skgen::dsbs
