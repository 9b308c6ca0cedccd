#pragma once

// Reliability and secrecy exponents, conditional entropies and secret key
// capacities for finite excited sources. All rates and exponents in nats.

#include <cstddef>
#include <vector>

#include "skgen/edms.hpp"

namespace skgen {

// Per-state Gallager source-coding function:
//   log sum_b Q_s(b) (sum_a W_s(a|b)^{1/(1+rho)})^{1+rho},  rho in [0,1].
// Nonnegative, zero at rho = 0; convex and nondecreasing in rho with slope
// H(X_a | X_b, S=s) at zero.
double e0_state(const FiniteEdms& model, double rho, std::size_t state);

// p_S-weighted sum of e0_state; exactly linear in the state distribution.
double e0(const FiniteEdms& model, const StateDistribution& p_s, double rho);

// Per-state privacy-amplification function:
//   -log sum_e Qe_s(e) sum_a V_s(a|e)^{1+alpha},  alpha in [0,1].
// Nonnegative, zero at alpha = 0; concave and nondecreasing with slope
// H(X_a | X_e, S=s) at zero.
double f0_state(const FiniteEdms& model, double alpha, std::size_t state);

double f0(const FiniteEdms& model, const StateDistribution& p_s, double alpha);

// max over rho in [0,1] of rho * message_rate - e0(rho). Returns exactly 0
// when message_rate <= H(X_a|X_b,S).
double reliability_exponent(const FiniteEdms& model, const StateDistribution& p_s,
                            double message_rate);

// max over alpha in [0,1] of f0(alpha) - alpha * (key + message rate).
// Returns exactly 0 when the sum rate >= H(X_a|X_e,S); depends on the rates
// only through their sum.
double secrecy_exponent(const FiniteEdms& model, const StateDistribution& p_s,
                        const RatePoint& rates);

double conditional_entropy_ab(const FiniteEdms& model, const StateDistribution& p_s);
double conditional_entropy_ae(const FiniteEdms& model, const StateDistribution& p_s);

// Secret key capacity for a model with degraded states (the caller asserts
// degradedness): maximizes the p_S-average of
// |I(X_a;X_b|S=s) - I(X_a;X_e|S=s)|^+ subject to the expected-cost budget.
// The objective is linear in p_S with one linear constraint, so the optimum
// sits on a support of at most two states; all singleton and budget-tight
// pair supports are enumerated. Throws infeasible_error when no state fits
// the budget.
double degraded_capacity(const FiniteEdms& model, double cost_budget);

// Upper bound max_{p_S} I(X_a; X_b | X_e, S) over the same feasible set.
double capacity_upper_bound(const FiniteEdms& model, double cost_budget);

// max over feasible p_S and rho in [0,1] of
//   rho [H(X_a|X_e,S) - key_rate] - e0(rho, p_S).
// For each candidate two-point support the maximand is concave in rho, so
// each support is solved by a 1-D concave search and the best is returned.
double optimized_reliability_exponent(const FiniteEdms& model, double cost_budget,
                                      double key_rate);

struct TradeoffPoint {
    double message_rate;
    double reliability;
    double secrecy;
};

// (E_R, E_S) along an ascending message-rate grid at a fixed key rate.
std::vector<TradeoffPoint> tradeoff_surface(const FiniteEdms& model, const StateDistribution& p_s,
                                            double key_rate,
                                            const std::vector<double>& message_rates);

}  // namespace skgen
