#include "skgen/dsbs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "skgen/numeric.hpp"

namespace skgen::dsbs {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_theta(double theta) {
    if (theta < 0.0 || theta > 0.5) throw std::domain_error("theta must be in [0, 1/2]");
}

// -tau log2(theta) - (1-tau) log2(1-theta)
double cross_entropy_bits(double tau, double theta) {
    return -(tau * std::log2(theta) + (1.0 - tau) * std::log2(1.0 - theta));
}

}  // namespace

void Model::validate() const {
    check_theta(theta);
    if (eve_crossover <= 0.0 || eve_crossover > 0.5)
        throw std::domain_error("eavesdropper crossover must be in (0, 1/2]");
}

double crossover_from_snr(double snr) {
    if (snr < 0.0) throw std::domain_error("SNR must be nonnegative");
    const double geq = snr * snr / (1.0 + 2.0 * snr);
    return 0.5 - std::atan(std::sqrt(geq)) / kPi;
}

double key_rate(double theta) {
    check_theta(theta);
    return 1.0 - binary_entropy_bits(theta);
}

double key_rate_from_snr(double snr) { return key_rate(crossover_from_snr(snr)); }

namespace {

double key_rate_slope(double snr) {
    const double geq = snr * snr / (1.0 + 2.0 * snr);
    const double dgeq = 2.0 * snr * (1.0 + snr) / ((1.0 + 2.0 * snr) * (1.0 + 2.0 * snr));
    const double theta = 0.5 - std::atan(std::sqrt(geq)) / kPi;
    const double dtheta = -dgeq / (kPi * (1.0 + geq) * 2.0 * std::sqrt(geq));
    // dH_B/dtheta in bits
    const double dh = std::log2((1.0 - theta) / theta);
    return -dh * dtheta;
}

}  // namespace

double threshold_snr() {
    static const double root = bisect_root(
        [](double g) { return key_rate_from_snr(g) - g * key_rate_slope(g); }, 0.1, 10.0, 1e-12);
    return root;
}

double reliability_exponent_message_rate(double message_rate_bits, double theta) {
    check_theta(theta);
    if (message_rate_bits < 0.0) throw std::domain_error("message rate must be nonnegative");
    if (theta == 0.0) return std::numeric_limits<double>::infinity();
    if (message_rate_bits <= binary_entropy_bits(theta)) return 0.0;
    const double st = std::sqrt(theta), sc = std::sqrt(1.0 - theta);
    const double tau_max = st / (st + sc);
    if (message_rate_bits > binary_entropy_bits(tau_max))
        return message_rate_bits - 2.0 * std::log2(st + sc);
    const double tau = binary_entropy_inv_bits(message_rate_bits);
    return cross_entropy_bits(tau, theta) - binary_entropy_bits(tau);
}

double reliability_exponent_theta(double key_rate_bits, double theta) {
    if (key_rate_bits < 0.0 || key_rate_bits > 1.0)
        throw std::domain_error("binary key rate must be in [0, 1] bits");
    return reliability_exponent_message_rate(1.0 - key_rate_bits, theta);
}

double reliability_exponent(double key_rate_bits, double snr) {
    return reliability_exponent_theta(key_rate_bits, crossover_from_snr(snr));
}

int reliability_region(double key_rate_bits, double snr) {
    const double theta = crossover_from_snr(snr);
    if (key_rate_bits >= key_rate(theta)) return 1;
    const double st = std::sqrt(theta), sc = std::sqrt(1.0 - theta);
    const double low_rate_edge = 1.0 - binary_entropy_bits(st / (st + sc));
    return key_rate_bits >= low_rate_edge ? 2 : 3;
}

namespace {

// F_0(alpha) = -log2(w^{1+a} + (1-w)^{1+a}), bits.
double f0_bits(double alpha, double w) {
    return -std::log2(std::pow(w, 1.0 + alpha) + std::pow(1.0 - w, 1.0 + alpha));
}

// dF_0/dalpha in bits equals the cross entropy of the tilted crossover.
double tilted_crossover(double alpha, double w) {
    const double num = std::pow(w, 1.0 + alpha);
    return num / (num + std::pow(1.0 - w, 1.0 + alpha));
}

}  // namespace

double secrecy_exponent(double sum_rate_bits, double eve_crossover) {
    if (sum_rate_bits < 0.0) throw std::domain_error("sum rate must be nonnegative");
    if (eve_crossover <= 0.0 || eve_crossover > 0.5)
        throw std::domain_error("eavesdropper crossover must be in (0, 1/2]");
    const double w = eve_crossover;
    // the slope of F_0 at tilt zero is H_B(w); evaluating it through the
    // same expression as the bisection endpoint keeps the bracket signs
    // consistent at the region boundary
    const double slope_at_zero = cross_entropy_bits(tilted_crossover(0.0, w), w);
    if (sum_rate_bits > slope_at_zero) return 0.0;
    const double slope_at_one = cross_entropy_bits(tilted_crossover(1.0, w), w);
    if (sum_rate_bits <= slope_at_one) return f0_bits(1.0, w) - sum_rate_bits;
    // F_0 concave: its slope is decreasing, so the stationary alpha solves
    // slope(alpha) = sum rate by bisection.
    const double alpha = bisect_root(
        [&](double a) { return cross_entropy_bits(tilted_crossover(a, w), w) - sum_rate_bits; },
        0.0, 1.0, 1e-12, 300);
    return std::max(f0_bits(alpha, w) - alpha * sum_rate_bits, 0.0);
}

OnOffExponent onoff_reliability_exponent(double key_rate_bits, double snr) {
    if (key_rate_bits < 0.0 || key_rate_bits > 1.0)
        throw std::domain_error("binary key rate must be in [0, 1] bits");
    if (snr < 0.0) throw std::domain_error("SNR must be nonnegative");
    if (snr == 0.0) return {0.0, 1.0};
    auto effective = [&](double duty) {
        const double scaled_rate = key_rate_bits / duty;
        if (scaled_rate > 1.0) return 0.0;  // beyond one bit per symbol: nothing decodable
        return duty * reliability_exponent(scaled_rate, snr / duty);
    };
    constexpr int kGrid = 200;
    const double log_lo = std::log(1e-6), log_hi = 0.0;
    double best_val = -1.0, best_log = log_hi;
    for (int i = 0; i < kGrid; ++i) {
        const double ll = log_lo + (log_hi - log_lo) * i / (kGrid - 1);
        const double v = effective(std::exp(ll));
        if (v > best_val) {
            best_val = v;
            best_log = ll;
        }
    }
    const double step = (log_hi - log_lo) / (kGrid - 1);
    const auto refined = golden_section_max(
        [&](double ll) { return effective(std::exp(ll)); }, std::max(log_lo, best_log - step),
        std::min(log_hi, best_log + step), 1e-12);
    OnOffExponent out{refined.value, std::exp(refined.arg)};
    const double full = effective(1.0);
    if (full >= out.value) out = {full, 1.0};
    return out;
}

}  // namespace skgen::dsbs
