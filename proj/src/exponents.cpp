#include "skgen/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "skgen/numeric.hpp"

namespace skgen {

namespace {

void check_unit_interval(double v, const char* name) {
    if (v < 0.0 || v > 1.0) throw std::domain_error(std::string(name) + " must be in [0,1]");
}

void check_state(const FiniteEdms& model, std::size_t state) {
    if (state >= model.num_states()) throw std::domain_error("state index out of range");
}

void check_distribution(const FiniteEdms& model, const StateDistribution& p_s) {
    if (p_s.mass.size() != model.num_states())
        throw std::domain_error("state distribution does not match the model's state set");
}

}  // namespace

double e0_state(const FiniteEdms& model, double rho, std::size_t state) {
    check_unit_interval(rho, "rho");
    check_state(model, state);
    if (rho == 0.0) return 0.0;
    const std::size_t na = model.size_a(), nb = model.size_b();
    const auto pab = model.joint_ab(state);
    double total = 0.0;
    for (std::size_t b = 0; b < nb; ++b) {
        double qb = 0.0;
        for (std::size_t a = 0; a < na; ++a) qb += pab[a * nb + b];
        if (qb <= 0.0) continue;  // zero-mass conditions are excluded
        double inner = 0.0;
        for (std::size_t a = 0; a < na; ++a) {
            const double w = pab[a * nb + b] / qb;
            if (w > 0.0) inner += std::pow(w, 1.0 / (1.0 + rho));
        }
        total += qb * std::pow(inner, 1.0 + rho);
    }
    return std::log(total);
}

double e0(const FiniteEdms& model, const StateDistribution& p_s, double rho) {
    check_distribution(model, p_s);
    double v = 0.0;
    for (std::size_t s = 0; s < model.num_states(); ++s)
        if (p_s.mass[s] > 0.0) v += p_s.mass[s] * e0_state(model, rho, s);
    return v;
}

double f0_state(const FiniteEdms& model, double alpha, std::size_t state) {
    check_unit_interval(alpha, "alpha");
    check_state(model, state);
    if (alpha == 0.0) return 0.0;
    const std::size_t na = model.size_a(), ne = model.size_e();
    const auto pae = model.joint_ae(state);
    double total = 0.0;
    for (std::size_t e = 0; e < ne; ++e) {
        double qe = 0.0;
        for (std::size_t a = 0; a < na; ++a) qe += pae[a * ne + e];
        if (qe <= 0.0) continue;
        double inner = 0.0;
        for (std::size_t a = 0; a < na; ++a) {
            const double v = pae[a * ne + e] / qe;
            if (v > 0.0) inner += std::pow(v, 1.0 + alpha);
        }
        total += qe * inner;
    }
    return -std::log(total);
}

double f0(const FiniteEdms& model, const StateDistribution& p_s, double alpha) {
    check_distribution(model, p_s);
    double v = 0.0;
    for (std::size_t s = 0; s < model.num_states(); ++s)
        if (p_s.mass[s] > 0.0) v += p_s.mass[s] * f0_state(model, alpha, s);
    return v;
}

double reliability_exponent(const FiniteEdms& model, const StateDistribution& p_s,
                            double message_rate) {
    if (message_rate < 0.0) throw std::domain_error("message rate must be nonnegative");
    check_distribution(model, p_s);
    // below the conditional-entropy threshold the tilt collapses to zero
    if (message_rate <= conditional_entropy_ab(model, p_s)) return 0.0;
    const auto best = golden_section_max(
        [&](double rho) { return rho * message_rate - e0(model, p_s, rho); }, 0.0, 1.0);
    return std::max(best.value, 0.0);
}

double secrecy_exponent(const FiniteEdms& model, const StateDistribution& p_s,
                        const RatePoint& rates) {
    if (rates.key_rate < 0.0 || rates.message_rate < 0.0)
        throw std::domain_error("rates must be nonnegative");
    check_distribution(model, p_s);
    const double sum_rate = rates.key_rate + rates.message_rate;
    // beyond the conditional-entropy threshold no tilt helps
    if (sum_rate >= conditional_entropy_ae(model, p_s)) return 0.0;
    const auto best = golden_section_max(
        [&](double alpha) { return f0(model, p_s, alpha) - alpha * sum_rate; }, 0.0, 1.0);
    return std::max(best.value, 0.0);
}

double conditional_entropy_ab(const FiniteEdms& model, const StateDistribution& p_s) {
    check_distribution(model, p_s);
    double h = 0.0;
    for (std::size_t s = 0; s < model.num_states(); ++s)
        if (p_s.mass[s] > 0.0) h += p_s.mass[s] * model.conditional_entropy_a_given_b(s);
    return h;
}

double conditional_entropy_ae(const FiniteEdms& model, const StateDistribution& p_s) {
    check_distribution(model, p_s);
    double h = 0.0;
    for (std::size_t s = 0; s < model.num_states(); ++s)
        if (p_s.mass[s] > 0.0) h += p_s.mass[s] * model.conditional_entropy_a_given_e(s);
    return h;
}

namespace {

struct SupportPoint {
    std::size_t first, second;  // first == second for singletons
    double weight_first;        // mass on `first`
};

// Vertices of { p in simplex : cost . p <= budget }: singleton supports that
// fit the budget, plus budget-tight mixtures of a cheap and an expensive
// state. A linear objective attains its maximum on one of these.
std::vector<SupportPoint> feasible_supports(const std::vector<double>& cost, double budget) {
    std::vector<SupportPoint> out;
    const std::size_t n = cost.size();
    for (std::size_t s = 0; s < n; ++s)
        if (cost[s] <= budget) out.push_back({s, s, 1.0});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (cost[i] >= budget || cost[j] <= budget) continue;
            const double w = (cost[j] - budget) / (cost[j] - cost[i]);
            out.push_back({i, j, w});
        }
    return out;
}

StateDistribution to_distribution(const FiniteEdms& model, const SupportPoint& sp, double budget) {
    StateDistribution d;
    d.mass.assign(model.num_states(), 0.0);
    d.mass[sp.first] += sp.weight_first;
    d.mass[sp.second] += 1.0 - sp.weight_first;
    d.cost_budget = budget;
    return d;
}

double max_linear_over_budget(const FiniteEdms& model, const std::vector<double>& value,
                              double cost_budget) {
    if (cost_budget < 0.0) throw std::domain_error("cost budget must be nonnegative");
    const auto supports = feasible_supports(model.cost(), cost_budget);
    if (supports.empty())
        throw infeasible_error("no state distribution satisfies the cost budget");
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& sp : supports) {
        const double v = sp.weight_first * value[sp.first] + (1.0 - sp.weight_first) * value[sp.second];
        best = std::max(best, v);
    }
    return best;
}

}  // namespace

double degraded_capacity(const FiniteEdms& model, double cost_budget) {
    std::vector<double> rate(model.num_states());
    for (std::size_t s = 0; s < model.num_states(); ++s)
        rate[s] = std::max(model.mutual_information_ab(s) - model.mutual_information_ae(s), 0.0);
    return max_linear_over_budget(model, rate, cost_budget);
}

double capacity_upper_bound(const FiniteEdms& model, double cost_budget) {
    std::vector<double> rate(model.num_states());
    for (std::size_t s = 0; s < model.num_states(); ++s)
        rate[s] = model.conditional_mi_ab_given_e(s);
    return max_linear_over_budget(model, rate, cost_budget);
}

double optimized_reliability_exponent(const FiniteEdms& model, double cost_budget,
                                      double key_rate) {
    if (key_rate < 0.0) throw std::domain_error("key rate must be nonnegative");
    const auto supports = feasible_supports(model.cost(), cost_budget);
    if (supports.empty())
        throw infeasible_error("no state distribution satisfies the cost budget");
    // The support set does not depend on rho, and for a fixed support the
    // maximand is concave in rho, so each candidate gets its own 1-D search.
    double best = 0.0;
    for (const auto& sp : supports) {
        const auto p_s = to_distribution(model, sp, cost_budget);
        const double h_ae = conditional_entropy_ae(model, p_s);
        // the tilt only helps when the effective message rate clears the
        // reconciliation threshold
        if (h_ae - key_rate <= conditional_entropy_ab(model, p_s)) continue;
        const auto m = golden_section_max(
            [&](double rho) { return rho * (h_ae - key_rate) - e0(model, p_s, rho); }, 0.0, 1.0);
        best = std::max(best, m.value);
    }
    return std::max(best, 0.0);
}

std::vector<TradeoffPoint> tradeoff_surface(const FiniteEdms& model, const StateDistribution& p_s,
                                            double key_rate,
                                            const std::vector<double>& message_rates) {
    if (message_rates.empty()) throw std::domain_error("message rate grid is empty");
    for (std::size_t i = 1; i < message_rates.size(); ++i)
        if (message_rates[i] < message_rates[i - 1])
            throw std::domain_error("message rate grid must be ascending");
    std::vector<TradeoffPoint> out;
    out.reserve(message_rates.size());
    for (double rm : message_rates) {
        out.push_back({rm, reliability_exponent(model, p_s, rm),
                       secrecy_exponent(model, p_s, {key_rate, rm})});
    }
    return out;
}

}  // namespace skgen
