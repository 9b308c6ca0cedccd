#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cmath>
#include <vector>

#include <json.hpp>

#include "skgen/binning.hpp"
#include "skgen/exponents.hpp"
#include "skgen/numeric.hpp"
#include "test_support.hpp"

using namespace skgen;
namespace b = skgen::binning;

namespace {

// Straightforward oracle: walk every (x_a, y_b) pair and decode with the
// public single-shot decoder. Independent of the two-pass evaluation path.
b::ErrorProbabilities exact_error_oracle(const b::BinningCode& code, double theta) {
    const int n = code.block_length;
    const std::uint32_t total = code.num_sequences();
    double p_key = 0.0, p_seq = 0.0;
    for (std::uint32_t xa = 0; xa < total; ++xa)
        for (std::uint32_t yb = 0; yb < total; ++yb) {
            const int dist = std::popcount(xa ^ yb);
            const double p = std::pow(theta, dist) * std::pow(1.0 - theta, n - dist) / total;
            if (p == 0.0) continue;
            const auto decoded = b::ml_decode(code, code.msg_map[xa], yb, theta);
            REQUIRE(decoded.has_value());
            if (*decoded != xa) {
                p_seq += p;
                if (code.key_map[*decoded] != code.key_map[xa]) p_key += p;
            }
        }
    return {p_key, p_seq};
}

}  // namespace

TEST_CASE("code generation is deterministic and respects bin-count floors") {
    const auto a = b::generate_code(8, 0.3, 0.6, 42);
    const auto c = b::generate_code(8, 0.3, 0.6, 42);
    CHECK(a.key_map == c.key_map);
    CHECK(a.msg_map == c.msg_map);
    const auto other = b::generate_code(8, 0.3, 0.6, 43);
    CHECK(a.key_map != other.key_map);

    CHECK(a.key_bins == static_cast<std::uint64_t>(std::floor(std::exp(8 * 0.3))));
    CHECK(a.msg_bins == static_cast<std::uint64_t>(std::floor(std::exp(8 * 0.6))));
    const auto tiny = b::generate_code(4, 0.0, 0.0, 1);
    CHECK(tiny.key_bins == 1);
    CHECK(tiny.msg_bins == 1);
    CHECK_THROWS_AS(b::generate_code(25, 0.1, 0.1, 1), std::length_error);
    CHECK_THROWS_AS(b::generate_code(0, 0.1, 0.1, 1), std::domain_error);
}

TEST_CASE("the two bin maps come from independent streams") {
    const auto code = b::generate_code(10, 0.5, 0.5, 7);
    // same rates, so identical streams would make the maps collide heavily
    std::size_t agree = 0;
    for (std::uint32_t x = 0; x < code.num_sequences(); ++x)
        if (code.key_map[x] == code.msg_map[x]) ++agree;
    const double frac = static_cast<double>(agree) / code.num_sequences();
    CHECK(frac < 0.1);  // expected 1/|K| ~ 0.007 here
}

TEST_CASE("bin occupancy is uniform under a chi-square sanity check") {
    // 1024 sequences into 16 message bins; critical value for 15 degrees of
    // freedom at significance 0.001 is 37.697
    const auto code = b::generate_code(10, 0.0, std::log(16.2) / 10.0, 2024);
    REQUIRE(code.msg_bins == 16);
    std::vector<int> counts(16, 0);
    for (std::uint32_t x = 0; x < code.num_sequences(); ++x) ++counts[code.msg_map[x]];
    const double expected = 1024.0 / 16.0;
    double chi2 = 0.0;
    for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
    CHECK(chi2 <= 37.697);
}

TEST_CASE("ml decoding: likelihood point mass, full bin, adversarial bin") {
    // n = 3, bin {000, 111} against observation 001: distance 1 beats 2
    auto code = b::generate_code(3, 0.0, std::log(2.0) / 3.0, 5);
    REQUIRE(code.msg_bins == 2);
    for (auto& m : code.msg_map) m = 1;  // empty bin 0
    code.msg_map[0b000] = 0;
    code.msg_map[0b111] = 0;
    const auto adversarial = b::ml_decode(code, 0, 0b001, 0.1);
    REQUIRE(adversarial.has_value());
    CHECK(*adversarial == 0b000);
    // whole space in one bin: the observation itself is the optimum
    for (auto& m : code.msg_map) m = 0;
    const auto self = b::ml_decode(code, 0, 0b101, 0.2);
    REQUIRE(self.has_value());
    CHECK(*self == 0b101);
    // singleton and empty bins
    code.msg_map[0b010] = 1;
    for (std::uint32_t x = 0; x < 8; ++x)
        if (x != 0b010) code.msg_map[x] = 0;
    const auto singleton = b::ml_decode(code, 1, 0b111, 0.2);
    REQUIRE(singleton.has_value());  // bin 1 holds exactly 010
    CHECK(*singleton == 0b010);
    for (auto& m : code.msg_map) m = 0;
    CHECK_FALSE(b::ml_decode(code, 1, 0b111, 0.2).has_value());
    CHECK_THROWS_AS(b::ml_decode(code, 99, 0b001, 0.2), std::domain_error);
    CHECK_THROWS_AS(b::ml_decode(code, 0, 0b001, 0.0), std::domain_error);
}

TEST_CASE("tie-breaking picks the smallest sequence") {
    auto code = b::generate_code(2, 0.0, std::log(2.0) / 2.0, 9);
    REQUIRE(code.msg_bins == 2);
    // bin 0 = {01, 10}: both at distance 1 from 00 or 11
    code.msg_map = {1, 0, 0, 1};
    const auto tie = b::ml_decode(code, 0, 0b00, 0.3);
    REQUIRE(tie.has_value());
    CHECK(*tie == 0b01);
}

TEST_CASE("exact error: noiseless source never errs") {
    const auto code = b::generate_code(6, 0.2, 0.4, 11);
    const auto r = b::exact_error_probability(code, 0.0);
    CHECK(r.key_mismatch == 0.0);
    CHECK(r.sequence_error == 0.0);
    // message alphabet as large as the source: still zero for every code
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto big = b::generate_code(6, 0.2, std::log(70.0) / 6.0, seed);
        REQUIRE(big.msg_bins >= big.num_sequences());
        CHECK(b::exact_error_probability(big, 0.0).sequence_error == 0.0);
    }
}

TEST_CASE("exact error matches the single-shot decoding oracle") {
    for (std::uint64_t seed : {1u, 2u}) {
        const auto code = b::generate_code(5, 0.25, 0.55, seed);
        for (double theta : {0.1, 0.5}) {
            const auto fast = b::exact_error_probability(code, theta);
            const auto slow = exact_error_oracle(code, theta);
            CHECK(fast.key_mismatch == doctest::Approx(slow.key_mismatch).epsilon(1e-12));
            CHECK(fast.sequence_error == doctest::Approx(slow.sequence_error).epsilon(1e-12));
        }
    }
}

TEST_CASE("exact error: independent observations leave mostly collisions") {
    // two message bins over sixteen sequences, seven key bins
    const auto code = b::generate_code(4, 0.5, 0.2, 3);
    REQUIRE(code.key_bins >= 2);
    REQUIRE(code.msg_bins == 2);
    const auto r = b::exact_error_probability(code, 0.5);
    // decoding inside a crowded bin is hopeless, and the key disagrees
    // unless the decoded sequence collides into the same key bin
    CHECK(r.sequence_error > 0.5);
    CHECK(r.key_mismatch > 0.25);
    CHECK(r.key_mismatch <= r.sequence_error);
}

TEST_CASE("event containment: key mismatch never exceeds the sequence error") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const auto code = b::generate_code(7, 0.2, 0.5, 100 + seed);
        const auto r = b::exact_error_probability(code, 0.12);
        CHECK(r.key_mismatch <= r.sequence_error + 1e-15);
    }
    CHECK_THROWS_AS(
        b::exact_error_probability(b::generate_code(15, 0.1, 0.1, 1), 0.1),
        std::length_error);
}

TEST_CASE("ensemble average stays under the source-coding bound") {
    const auto r = b::ensemble_error_check(8, 0.8 * kLn2, 0.1, 60, 500);
    CHECK(r.mean_sequence_error <= r.bound + 3.0 * r.std_error);
    CHECK(r.mean_sequence_error > 0.0);
    // the bound at tilt zero is 1, so any minimized bound is at most that
    CHECK(r.bound <= 1.0);
    // noiseless: zero mean against a positive bound
    const auto zero = b::ensemble_error_check(6, 0.5, 0.0, 5, 1);
    CHECK(zero.mean_sequence_error == 0.0);
}

TEST_CASE("gallager bound: tilt-zero edge equals one") {
    CHECK(b::gallager_bound(8, 1, 0.3, 2) == doctest::Approx(1.0).epsilon(1e-12));
    // with |M| = 1 every tilt gives at least 1, the zero tilt attains it
    CHECK(b::gallager_bound(10, 1, 0.2) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("gallager bound agrees with the finite engine's exponent function") {
    // the binary closed form inside the bound is the single-state e0
    const double theta = 0.12;
    const auto model = skgen::testing::dsbs_pair_model(theta);
    const int n = 9;
    const std::uint64_t msg_bins = 37;
    double best = 1e300;
    for (int i = 0; i < 400; ++i) {
        const double rho = i / 399.0;
        best = std::min(best, std::exp(-rho * std::log(double(msg_bins)) +
                                       n * e0_state(model, rho, 0)));
    }
    CHECK(b::gallager_bound(n, msg_bins, theta, 400) == doctest::Approx(best).epsilon(1e-12));
}

TEST_CASE("exact leakage: degenerate codes leak nothing") {
    const auto one_key = b::generate_code(8, 0.0, 0.5, 21);
    REQUIRE(one_key.key_bins == 1);
    CHECK(b::exact_leakage(one_key, 0.5) == 0.0);
    CHECK(b::exact_leakage(one_key, 0.2) == doctest::Approx(0.0).epsilon(1e-12));
    const auto one_msg = b::generate_code(8, 0.4, 0.0, 22);
    REQUIRE(one_msg.msg_bins == 1);
    CHECK(b::exact_leakage(one_msg, 0.5) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("data processing: a correlated eavesdropper learns at least the public message") {
    const auto code = b::generate_code(8, 0.3, 0.5, 33);
    const double with_channel = b::exact_leakage(code, 0.2);
    const double public_only = b::exact_leakage(code, 0.5);
    CHECK(with_channel >= public_only - 1e-12);
    CHECK(public_only >= 0.0);
    CHECK_THROWS_AS(b::exact_leakage(b::generate_code(11, 0.1, 0.1, 1), 0.2),
                    std::length_error);
    CHECK_THROWS_AS(b::exact_leakage(b::generate_code(21, 0.1, 0.1, 1), 0.5),
                    std::length_error);
}

TEST_CASE("ensemble-averaged public leakage trends down inside the secrecy region") {
    // key 0.25 bits, message 0.5 bits: sum 0.75 < 1 bit
    const double rsk = 0.25 * kLn2, rm = 0.5 * kLn2;
    std::vector<double> means;
    for (int n : {4, 8, 12, 16}) {
        double total = 0.0;
        for (int c = 0; c < 20; ++c)
            total += b::exact_leakage(b::generate_code(n, rsk, rm, 100 + c), 0.5);
        means.push_back(total / 20.0);
    }
    for (std::size_t i = 1; i < means.size(); ++i) CHECK(means[i] < means[i - 1]);
}

TEST_CASE("key entropy approaches uniform as the block grows") {
    const double rsk = 0.3 * kLn2;
    double prev_ratio = 0.0;
    for (int n : {4, 8, 12, 16}) {
        const auto code = b::generate_code(n, rsk, 0.0, 77);
        const double ratio = b::key_entropy(code) / std::log(static_cast<double>(code.key_bins));
        CHECK(ratio >= prev_ratio - 1e-9);
        CHECK(ratio <= 1.0 + 1e-12);
        prev_ratio = ratio;
    }
    CHECK(prev_ratio > 0.999);
}

TEST_CASE("monte carlo: determinism, noiseless runs, schema") {
    const auto code = b::generate_code(8, 0.2, 0.6, 4);
    const auto r1 = b::monte_carlo_run(code, 0.1, 0.5, 5000, 9);
    const auto r2 = b::monte_carlo_run(code, 0.1, 0.5, 5000, 9);
    CHECK(b::to_json(r1) == b::to_json(r2));
    const auto other_seed = b::monte_carlo_run(code, 0.1, 0.5, 5000, 10);
    CHECK(other_seed.error_estimate != r1.error_estimate);

    const auto clean = b::monte_carlo_run(code, 0.0, 0.5, 2000, 1);
    CHECK(clean.error_estimate == 0.0);
    CHECK(std::isinf(clean.empirical_exponent));

    const auto j = nlohmann::json::parse(b::to_json(r1));
    for (const char* field :
         {"n", "r_sk_nats", "r_m_nats", "theta", "w", "trials", "seed", "error_estimate",
          "error_ci_halfwidth", "leakage_nats", "leakage_exact", "empirical_exponent",
          "gallager_bound"})
        CHECK(j.contains(field));
    CHECK(j["n"] == 8);
    CHECK(j["leakage_exact"] == true);
    CHECK(j["empirical_exponent"].is_null() == false);
    // zero-error exponent serializes as null
    const auto jc = nlohmann::json::parse(b::to_json(clean));
    CHECK(jc["empirical_exponent"].is_null());
}

TEST_CASE("monte carlo estimate is consistent with the exact probability") {
    const auto code = b::generate_code(8, 0.25, 0.65, 15);
    const double exact = b::exact_error_probability(code, 0.1).key_mismatch;
    const auto run = b::monte_carlo_run(code, 0.1, 0.5, 100000, 3);
    const double se = std::sqrt(exact * (1.0 - exact) / 100000.0);
    CHECK(std::abs(run.error_estimate - exact) <= 3.0 * se);
    // Wilson interval also brackets the exact value
    CHECK(std::abs(run.error_estimate - exact) <= 3.0 * run.error_ci_halfwidth);
}

TEST_CASE("leakage is reported exactly or not at all") {
    // correlated eavesdropper above the enumeration cap: no estimate
    const auto big = b::generate_code(12, 0.2, 0.3, 6);
    const auto run = b::monte_carlo_run(big, 0.1, 0.3, 100, 2);
    CHECK_FALSE(run.leakage.has_value());
    CHECK_FALSE(run.leakage_exact);
    // public-only fits at the same size
    const auto pub = b::monte_carlo_run(big, 0.1, 0.5, 100, 2);
    CHECK(pub.leakage.has_value());
    CHECK(pub.leakage_exact);
}
