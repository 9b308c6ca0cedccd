#pragma once

// Scalar numerics shared across the library: 1-D concave maximization,
// bracketed root finding, and binary entropy helpers.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace skgen {

inline constexpr double kLn2 = 0.69314718055994530941723212145818;

// Thrown when a constrained optimization has an empty feasible set or a
// search grid contains no admissible point.
class infeasible_error : public std::runtime_error {
  public:
    explicit infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

struct ScalarMax {
    double arg = 0.0;
    double value = 0.0;
};

// Golden-section search for the maximum of a unimodal (concave) function on
// [lo, hi]. The interval endpoints are compared explicitly afterwards so a
// boundary optimum is returned exactly (arg == lo or arg == hi, value == f
// evaluated there), which keeps thresholds like "exponent is zero at the
// critical rate" exact instead of 1e-18-ish.
template <typename F>
ScalarMax golden_section_max(F&& f, double lo, double hi, double arg_tol = 1e-9) {
    static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > arg_tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    ScalarMax best{0.5 * (a + b), f(0.5 * (a + b))};
    const double at_lo = f(lo), at_hi = f(hi);
    if (at_lo >= best.value) best = {lo, at_lo};
    if (at_hi > best.value) best = {hi, at_hi};
    return best;
}

// Bracketed root finder: alternates a secant proposal with plain bisection
// so the bracket provably halves every other step; the secant step is only
// taken when it lands inside the current bracket. Requires f(lo) and f(hi)
// of opposite sign.
template <typename F>
double bisect_root(F&& f, double lo, double hi, double tol = 1e-12, int max_iter = 200) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) throw std::invalid_argument("bisect_root: no sign change in bracket");
    for (int i = 0; i < max_iter && hi - lo > tol; ++i) {
        double mid = 0.5 * (lo + hi);
        if (i % 2 == 0 && fhi != flo) {
            const double sec = lo - flo * (hi - lo) / (fhi - flo);
            if (sec > lo + 0.01 * (hi - lo) && sec < hi - 0.01 * (hi - lo)) mid = sec;
        }
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    return 0.5 * (lo + hi);
}

// -p log p with the 0 log 0 = 0 convention.
inline double entropy_term(double p) { return p > 0.0 ? -p * std::log(p) : 0.0; }

inline double binary_entropy(double p) { return entropy_term(p) + entropy_term(1.0 - p); }

inline double binary_entropy_bits(double p) { return binary_entropy(p) / kLn2; }

// Inverse of the bits-valued binary entropy on the branch [0, 1/2].
// 80 bisection steps shrink the interval below 1e-24.
inline double binary_entropy_inv_bits(double y) {
    if (y < 0.0 || y > 1.0) throw std::domain_error("binary_entropy_inv_bits: value outside [0,1]");
    if (y == 0.0) return 0.0;
    if (y == 1.0) return 0.5;
    double lo = 0.0, hi = 0.5;
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (binary_entropy_bits(mid) < y)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

inline double nats_to_bits(double v) { return v / kLn2; }
inline double bits_to_nats(double v) { return v * kLn2; }

}  // namespace skgen
