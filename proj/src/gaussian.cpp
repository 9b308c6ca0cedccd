#include "skgen/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "skgen/numeric.hpp"

namespace skgen::gaussian {

void System::validate() const {
    if (snr_a < 0.0 || snr_b < 0.0) throw std::domain_error("SNR must be nonnegative");
    if (noise_power <= 0.0) throw std::domain_error("noise power must be positive");
}

double equivalent_snr(const System& sys) {
    sys.validate();
    if (sys.snr_a == 0.0 || sys.snr_b == 0.0) return 0.0;
    return 1.0 / (1.0 / sys.snr_a + 1.0 / sys.snr_b + 1.0 / (sys.snr_a * sys.snr_b));
}

double equivalent_snr(double snr) { return equivalent_snr(System::symmetric(snr)); }

double key_rate(const System& sys) { return std::log1p(equivalent_snr(sys)); }

double key_rate(double snr) { return key_rate(System::symmetric(snr)); }

EquivalentChannel equivalent_channel(const System& sys) {
    sys.validate();
    const double beta = sys.snr_a / (sys.snr_a + 1.0);
    if (sys.snr_a == 0.0) return {0.0, sys.noise_power, 0.0};
    if (sys.snr_b == 0.0) return {beta, std::numeric_limits<double>::infinity(), 0.0};
    const double power = sys.snr_a * sys.noise_power;  // P, with sigma_a^2 = noise_power
    const double sa2 = power + sys.noise_power;        // E|X_a|^2
    const double sigma_b2 = power / sys.snr_b;
    const double noise = (power + sigma_b2) - power * power / sa2;
    return {beta, noise, beta * beta * sa2 / noise};
}

namespace {

// d/dg log(1 + g^2/(1+2g)) = 2g / ((1+2g)(1+g))
double key_rate_slope(double snr) { return 2.0 * snr / ((1.0 + 2.0 * snr) * (1.0 + snr)); }

}  // namespace

double threshold_snr() {
    static const double root = bisect_root(
        [](double g) { return key_rate(g) - g * key_rate_slope(g); }, 0.5, 10.0, 1e-12);
    return root;
}

CapacityPoint capacity(double snr) {
    if (snr < 0.0) throw std::domain_error("SNR must be nonnegative");
    if (snr == 0.0) return {0.0, 0.0};
    const double gc = threshold_snr();
    if (snr >= gc) return {key_rate(snr), 1.0};
    const double duty = snr / gc;
    return {duty * key_rate(gc), duty};
}

double min_energy_per_key_bit() {
    const double gc = threshold_snr();
    return gc * kLn2 / key_rate(gc);
}

double reliability_exponent(double key_rate_nats, double snr) {
    if (key_rate_nats < 0.0) throw std::domain_error("key rate must be nonnegative");
    if (snr < 0.0) throw std::domain_error("SNR must be nonnegative");
    const double geq = equivalent_snr(snr);
    const double ik = std::log1p(geq);
    if (key_rate_nats >= ik) return 0.0;
    const double ic = std::log((1.0 + geq) / 2.0);
    if (key_rate_nats < ic && geq >= 1.0) return ik - key_rate_nats + 1.0 - 2.0 * kLn2;
    const double rho = std::exp(ik - key_rate_nats) - 1.0;
    return rho * (ik - key_rate_nats + 1.0) - (1.0 + rho) * std::log1p(rho);
}

int reliability_region(double key_rate_nats, double snr) {
    const double geq = equivalent_snr(snr);
    const double ik = std::log1p(geq);
    if (key_rate_nats >= ik) return 1;
    const double ic = std::log((1.0 + geq) / 2.0);
    return key_rate_nats >= ic ? 2 : 3;
}

namespace {

// Shared lambda search for duty-cycled exponents: coarse log-spaced grid
// seeds a golden-section refinement, with the full-duty endpoint compared
// explicitly.
template <typename F>
OnOffExponent maximize_duty(F&& effective, double lambda_min = 1e-6, int grid = 200) {
    const double log_lo = std::log(lambda_min), log_hi = 0.0;
    double best_val = -1.0, best_log = log_hi;
    for (int i = 0; i < grid; ++i) {
        const double ll = log_lo + (log_hi - log_lo) * i / (grid - 1);
        const double v = effective(std::exp(ll));
        if (v > best_val) {
            best_val = v;
            best_log = ll;
        }
    }
    const double step = (log_hi - log_lo) / (grid - 1);
    const double lo = std::max(log_lo, best_log - step), hi = std::min(log_hi, best_log + step);
    auto on_log = [&](double ll) { return effective(std::exp(ll)); };
    const auto refined = golden_section_max(on_log, lo, hi, 1e-12);
    OnOffExponent out{refined.value, std::exp(refined.arg)};
    const double full = effective(1.0);
    if (full >= out.value) out = {full, 1.0};
    return out;
}

}  // namespace

OnOffExponent onoff_reliability_exponent(double key_rate_nats, double snr) {
    if (snr == 0.0) return {reliability_exponent(key_rate_nats, 0.0), 1.0};
    return maximize_duty([&](double duty) {
        return duty * reliability_exponent(key_rate_nats / duty, snr / duty);
    });
}

double e0(double rho, double snr) {
    if (rho < 0.0 || rho > 1.0) throw std::domain_error("rho must be in [0,1]");
    if (snr < 0.0) throw std::domain_error("SNR must be nonnegative");
    if (rho == 0.0) return 0.0;
    const double sa2 = 1.0 + snr;  // noise power 1
    const double cond_var = sa2 / (1.0 + equivalent_snr(snr));
    const double pi = 3.14159265358979323846;
    return rho * std::log(pi * cond_var) + (1.0 + rho) * std::log1p(rho);
}

namespace {

constexpr std::int64_t kMaxBlockLength = 10'000'000;

template <typename Exponent>
FiniteBlockPoint smallest_feasible_block(double key_bits, double epsilon, double snr,
                                         Exponent&& exponent) {
    const double target = std::log(1.0 / epsilon);
    const double rate_scale = kLn2 * key_bits;
    auto enough = [&](std::int64_t n) {
        return static_cast<double>(n) * exponent(rate_scale / static_cast<double>(n), snr) >=
               target;
    };
    if (!enough(kMaxBlockLength)) return {false, 0.0, 0};
    std::int64_t lo = 1, hi = kMaxBlockLength;  // enough(hi) holds
    while (lo < hi) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (enough(mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    return {true, snr * static_cast<double>(lo), lo};
}

}  // namespace

FiniteBlockPoint finite_block_point(double key_bits, double epsilon, double snr, bool on_off) {
    if (key_bits < 1.0) throw std::domain_error("key size must be at least one bit");
    if (epsilon <= 0.0 || epsilon >= 1.0) throw std::domain_error("epsilon must be in (0,1)");
    if (snr < 0.0) throw std::domain_error("SNR must be nonnegative");
    if (on_off)
        return smallest_feasible_block(key_bits, epsilon, snr, [](double r, double g) {
            return onoff_reliability_exponent(r, g).value;
        });
    return smallest_feasible_block(key_bits, epsilon, snr,
                                   [](double r, double g) { return reliability_exponent(r, g); });
}

FiniteBlockResult finite_block_energy(double key_bits, double epsilon, bool on_off) {
    constexpr int kGridPoints = 400;
    const double lo = std::log(1e-3), hi = std::log(10.0);
    FiniteBlockResult best{0.0, 0, 0.0};
    bool found = false;
    for (int i = 0; i < kGridPoints; ++i) {
        const double snr = std::exp(lo + (hi - lo) * i / (kGridPoints - 1));
        const auto pt = finite_block_point(key_bits, epsilon, snr, on_off);
        if (!pt.feasible) continue;
        if (!found || pt.energy < best.energy) {
            best = {pt.energy, pt.block_length, snr};
            found = true;
        }
    }
    if (!found)
        throw infeasible_error(
            "no SNR on the [1e-3, 10] grid admits a block length within the 1e7 cap for the "
            "requested key size and reliability");
    return best;
}

}  // namespace skgen::gaussian
