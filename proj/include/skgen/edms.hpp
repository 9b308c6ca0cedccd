#pragma once

// Finite excited distributed memoryless source: per-state joint tables
// p(x_a, x_b, x_e | s) over small alphabets, a per-state excitation cost,
// and the excitation design distribution over states.

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace skgen {

class FiniteEdms {
  public:
    FiniteEdms() = default;
    FiniteEdms(std::vector<std::string> states,
               std::vector<std::string> alphabet_a,
               std::vector<std::string> alphabet_b,
               std::vector<std::string> alphabet_e,
               std::vector<double> joint,
               std::vector<double> cost);

    std::size_t num_states() const { return states_.size(); }
    std::size_t size_a() const { return alphabet_a_.size(); }
    std::size_t size_b() const { return alphabet_b_.size(); }
    std::size_t size_e() const { return alphabet_e_.size(); }

    const std::vector<std::string>& states() const { return states_; }
    const std::vector<std::string>& alphabet_a() const { return alphabet_a_; }
    const std::vector<std::string>& alphabet_b() const { return alphabet_b_; }
    const std::vector<std::string>& alphabet_e() const { return alphabet_e_; }
    const std::vector<double>& joint() const { return joint_; }
    const std::vector<double>& cost() const { return cost_; }

    // p(x_a = a, x_b = b, x_e = e | s)
    double prob(std::size_t s, std::size_t a, std::size_t b, std::size_t e) const {
        return joint_[((s * size_a() + a) * size_b() + b) * size_e() + e];
    }

    std::size_t state_index(const std::string& label) const;  // throws domain_error if absent

    // Per-state validity: nonnegative entries, each state's table sums to 1
    // within tol. Throws std::invalid_argument.
    void validate(double tol = 1e-12) const;

    // Marginals and expectations for one state, all in nats.
    std::vector<double> marginal_b(std::size_t s) const;  // Q_s(x_b)
    std::vector<double> marginal_e(std::size_t s) const;  // derived eavesdropper marginal
    std::vector<double> joint_ab(std::size_t s) const;    // p(x_a, x_b | s), a-major
    std::vector<double> joint_ae(std::size_t s) const;    // p(x_a, x_e | s), a-major

    double conditional_entropy_a_given_b(std::size_t s) const;  // H(X_a | X_b, S = s)
    double conditional_entropy_a_given_e(std::size_t s) const;  // H(X_a | X_e, S = s)
    double mutual_information_ab(std::size_t s) const;          // I(X_a; X_b | S = s)
    double mutual_information_ae(std::size_t s) const;          // I(X_a; X_e | S = s)
    double conditional_mi_ab_given_e(std::size_t s) const;      // I(X_a; X_b | X_e, S = s)

    // Checks the Markov factorization p(a,b,e|s) = p(a,b|s) p(e|b,s) for
    // every state. Declarative degradedness lives with the model builder;
    // this verifier is meant for tests.
    bool has_degraded_eavesdropper(double tol = 1e-9) const;

  private:
    std::vector<std::string> states_, alphabet_a_, alphabet_b_, alphabet_e_;
    std::vector<double> joint_;  // [s][a][b][e] row-major
    std::vector<double> cost_;
};

struct StateDistribution {
    std::vector<double> mass;  // aligned with FiniteEdms::states()
    double cost_budget = std::numeric_limits<double>::infinity();

    // Mass sums to 1 and the expected cost respects the budget, both within
    // tolerance 1e-12. Throws std::invalid_argument.
    void validate(const FiniteEdms& model) const;

    double expected_cost(const FiniteEdms& model) const;

    static StateDistribution point_mass(const FiniteEdms& model, std::size_t state);
};

struct RatePoint {
    double key_rate = 0.0;      // R_SK, nats per symbol
    double message_rate = 0.0;  // R_M, nats per symbol
};

struct ExponentTriple {
    double key_rate = 0.0;
    double reliability = 0.0;  // E_R, nats
    double secrecy = 0.0;      // E_S, nats
};

}  // namespace skgen
