#include "skgen/edms.hpp"

#include <cmath>
#include <stdexcept>

#include "skgen/numeric.hpp"

namespace skgen {

FiniteEdms::FiniteEdms(std::vector<std::string> states,
                       std::vector<std::string> alphabet_a,
                       std::vector<std::string> alphabet_b,
                       std::vector<std::string> alphabet_e,
                       std::vector<double> joint,
                       std::vector<double> cost)
    : states_(std::move(states)),
      alphabet_a_(std::move(alphabet_a)),
      alphabet_b_(std::move(alphabet_b)),
      alphabet_e_(std::move(alphabet_e)),
      joint_(std::move(joint)),
      cost_(std::move(cost)) {
    if (states_.empty() || alphabet_a_.empty() || alphabet_b_.empty() || alphabet_e_.empty())
        throw std::invalid_argument("FiniteEdms: empty alphabet");
    if (joint_.size() != num_states() * size_a() * size_b() * size_e())
        throw std::invalid_argument("FiniteEdms: joint table size mismatch");
    if (cost_.size() != num_states()) throw std::invalid_argument("FiniteEdms: cost size mismatch");
}

std::size_t FiniteEdms::state_index(const std::string& label) const {
    for (std::size_t s = 0; s < states_.size(); ++s)
        if (states_[s] == label) return s;
    throw std::domain_error("FiniteEdms: unknown state '" + label + "'");
}

void FiniteEdms::validate(double tol) const {
    for (double c : cost_)
        if (c < 0.0) throw std::invalid_argument("FiniteEdms: negative cost");
    for (std::size_t s = 0; s < num_states(); ++s) {
        double total = 0.0;
        for (std::size_t a = 0; a < size_a(); ++a)
            for (std::size_t b = 0; b < size_b(); ++b)
                for (std::size_t e = 0; e < size_e(); ++e) {
                    const double p = prob(s, a, b, e);
                    if (p < 0.0) throw std::invalid_argument("FiniteEdms: negative probability");
                    total += p;
                }
        if (std::abs(total - 1.0) > tol)
            throw std::invalid_argument("FiniteEdms: state '" + states_[s] + "' table sums to " +
                                        std::to_string(total));
    }
}

std::vector<double> FiniteEdms::marginal_b(std::size_t s) const {
    std::vector<double> q(size_b(), 0.0);
    for (std::size_t a = 0; a < size_a(); ++a)
        for (std::size_t b = 0; b < size_b(); ++b)
            for (std::size_t e = 0; e < size_e(); ++e) q[b] += prob(s, a, b, e);
    return q;
}

std::vector<double> FiniteEdms::marginal_e(std::size_t s) const {
    std::vector<double> q(size_e(), 0.0);
    for (std::size_t a = 0; a < size_a(); ++a)
        for (std::size_t b = 0; b < size_b(); ++b)
            for (std::size_t e = 0; e < size_e(); ++e) q[e] += prob(s, a, b, e);
    return q;
}

std::vector<double> FiniteEdms::joint_ab(std::size_t s) const {
    std::vector<double> t(size_a() * size_b(), 0.0);
    for (std::size_t a = 0; a < size_a(); ++a)
        for (std::size_t b = 0; b < size_b(); ++b)
            for (std::size_t e = 0; e < size_e(); ++e) t[a * size_b() + b] += prob(s, a, b, e);
    return t;
}

std::vector<double> FiniteEdms::joint_ae(std::size_t s) const {
    std::vector<double> t(size_a() * size_e(), 0.0);
    for (std::size_t a = 0; a < size_a(); ++a)
        for (std::size_t b = 0; b < size_b(); ++b)
            for (std::size_t e = 0; e < size_e(); ++e) t[a * size_e() + e] += prob(s, a, b, e);
    return t;
}

namespace {

// H(A|B) from a joint table p(a,b), a-major with nb columns.
double conditional_entropy(const std::vector<double>& pab, std::size_t na, std::size_t nb) {
    std::vector<double> pb(nb, 0.0);
    for (std::size_t a = 0; a < na; ++a)
        for (std::size_t b = 0; b < nb; ++b) pb[b] += pab[a * nb + b];
    double h = 0.0;
    for (std::size_t a = 0; a < na; ++a)
        for (std::size_t b = 0; b < nb; ++b) {
            const double p = pab[a * nb + b];
            if (p > 0.0 && pb[b] > 0.0) h += p * std::log(pb[b] / p);
        }
    return h;
}

double mutual_information(const std::vector<double>& pab, std::size_t na, std::size_t nb) {
    std::vector<double> pa(na, 0.0), pb(nb, 0.0);
    for (std::size_t a = 0; a < na; ++a)
        for (std::size_t b = 0; b < nb; ++b) {
            pa[a] += pab[a * nb + b];
            pb[b] += pab[a * nb + b];
        }
    double mi = 0.0;
    for (std::size_t a = 0; a < na; ++a)
        for (std::size_t b = 0; b < nb; ++b) {
            const double p = pab[a * nb + b];
            if (p > 0.0) mi += p * std::log(p / (pa[a] * pb[b]));
        }
    return mi;
}

}  // namespace

double FiniteEdms::conditional_entropy_a_given_b(std::size_t s) const {
    return conditional_entropy(joint_ab(s), size_a(), size_b());
}

double FiniteEdms::conditional_entropy_a_given_e(std::size_t s) const {
    return conditional_entropy(joint_ae(s), size_a(), size_e());
}

double FiniteEdms::mutual_information_ab(std::size_t s) const {
    return mutual_information(joint_ab(s), size_a(), size_b());
}

double FiniteEdms::mutual_information_ae(std::size_t s) const {
    return mutual_information(joint_ae(s), size_a(), size_e());
}

double FiniteEdms::conditional_mi_ab_given_e(std::size_t s) const {
    const std::size_t na = size_a(), nb = size_b(), ne = size_e();
    std::vector<double> pe(ne, 0.0);
    for (std::size_t a = 0; a < na; ++a)
        for (std::size_t b = 0; b < nb; ++b)
            for (std::size_t e = 0; e < ne; ++e) pe[e] += prob(s, a, b, e);
    double mi = 0.0;
    for (std::size_t e = 0; e < ne; ++e) {
        if (pe[e] <= 0.0) continue;
        std::vector<double> pab(na * nb, 0.0);
        for (std::size_t a = 0; a < na; ++a)
            for (std::size_t b = 0; b < nb; ++b) pab[a * nb + b] = prob(s, a, b, e) / pe[e];
        mi += pe[e] * mutual_information(pab, na, nb);
    }
    return mi;
}

bool FiniteEdms::has_degraded_eavesdropper(double tol) const {
    for (std::size_t s = 0; s < num_states(); ++s) {
        const auto pab = joint_ab(s);
        // p(e|b): from the (b, e) marginal
        std::vector<double> pbe(size_b() * size_e(), 0.0);
        std::vector<double> pb(size_b(), 0.0);
        for (std::size_t a = 0; a < size_a(); ++a)
            for (std::size_t b = 0; b < size_b(); ++b)
                for (std::size_t e = 0; e < size_e(); ++e) {
                    pbe[b * size_e() + e] += prob(s, a, b, e);
                    pb[b] += prob(s, a, b, e);
                }
        for (std::size_t a = 0; a < size_a(); ++a)
            for (std::size_t b = 0; b < size_b(); ++b)
                for (std::size_t e = 0; e < size_e(); ++e) {
                    if (pb[b] <= 0.0) continue;
                    const double factored = pab[a * size_b() + b] * pbe[b * size_e() + e] / pb[b];
                    if (std::abs(prob(s, a, b, e) - factored) > tol) return false;
                }
    }
    return true;
}

void StateDistribution::validate(const FiniteEdms& model) const {
    if (mass.size() != model.num_states())
        throw std::invalid_argument("StateDistribution: mass size mismatch with model states");
    double total = 0.0;
    for (double m : mass) {
        if (m < 0.0) throw std::invalid_argument("StateDistribution: negative mass");
        total += m;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("StateDistribution: mass sums to " + std::to_string(total));
    if (expected_cost(model) > cost_budget + 1e-12)
        throw std::invalid_argument("StateDistribution: expected cost exceeds budget");
}

double StateDistribution::expected_cost(const FiniteEdms& model) const {
    double c = 0.0;
    for (std::size_t s = 0; s < mass.size(); ++s) c += mass[s] * model.cost()[s];
    return c;
}

StateDistribution StateDistribution::point_mass(const FiniteEdms& model, std::size_t state) {
    StateDistribution d;
    d.mass.assign(model.num_states(), 0.0);
    d.mass.at(state) = 1.0;
    return d;
}

}  // namespace skgen
