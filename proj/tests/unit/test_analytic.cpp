#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "ojam/analytic.hpp"
#include "ojam/optimize.hpp"
#include "ojam/specfun.hpp"
#include "support/oracles.hpp"

using namespace ojam;

namespace {

// Setting shared by the closed-form checks: d = 1, alpha = 3, no noise,
// P_S = 100 mW, P_J = 1000 mW, lambda_J = 0.1, lambda_E = 0.01.
SystemParams reference() {
    return SystemParams::make({.p_s = 100, .p_j = 1000, .n0 = 0, .d = 1, .alpha = 3,
                               .lambda_j = 0.1, .lambda_e = 0.01, .sigma = 0.1, .epsilon = 0.01});
}

double gap(const SystemParams& p, double delta) {
    const DesignPoint dp = throughput(p, delta);
    return dp.r_t - dp.r_e;
}

} // namespace

TEST_CASE("selection probability and thinned intensity") {
    CHECK(selection_probability(std::log(2.0)) == doctest::Approx(0.5).epsilon(1e-15).scale(0));
    CHECK(selection_probability(1e-12) == doctest::Approx(1e-12).epsilon(1e-9).scale(0));
    CHECK(selection_probability(1.0) == doctest::Approx(0.6321205588285577).epsilon(1e-15).scale(0));
    CHECK(selected_intensity(std::log(2.0), 0.1) == doctest::Approx(0.05).epsilon(1e-15).scale(0));
    CHECK(selected_intensity(INFINITY, 0.1) == 0.1);
    CHECK(selected_intensity(1.0, 0.1) == doctest::Approx(0.06321205588285577).epsilon(1e-15).scale(0));
    CHECK_THROWS_AS(selection_probability(0.0), std::domain_error);
    CHECK_THROWS_AS(selected_intensity(1.0, 0.0), std::domain_error);
}

TEST_CASE("conditional gain moment") {
    const double rho = 2.0 / 3.0;
    CHECK(conditional_gain_moment(INFINITY, rho) == doctest::Approx(0.902745292950933611).epsilon(1e-13).scale(0));
    // int_0^1 x^(2/3) e^-x dx / (1 - e^-1), mpmath quadrature
    CHECK(conditional_gain_moment(1.0, rho) == doctest::Approx(0.525078455295222925).epsilon(1e-12).scale(0));
    const double oracle_value = oracle::lower_gamma(1.0 + rho, 1.0) / (1.0 - std::exp(-1.0));
    CHECK(conditional_gain_moment(1.0, rho) == doctest::Approx(oracle_value).epsilon(1e-10).scale(0));
    CHECK(conditional_gain_moment(1e-9, rho) < 1e-5);
    CHECK_THROWS_AS(conditional_gain_moment(1.0, 1.0), std::domain_error);
}

TEST_CASE("connection outage") {
    const SystemParams p = reference();
    CHECK(connection_outage(p, 1.0, 0.0) == 0.0);
    // 1 - exp(-a gamma(5/3, 1)), a and gamma from mpmath quadrature
    CHECK(connection_outage(p, 1.0, 1.0) == doctest::Approx(0.726537887489212434).epsilon(1e-12).scale(0));
    CHECK(connection_outage(p, 1e-12, 1.0) < 1e-18);
    CHECK_THROWS_AS(connection_outage(p, 1.0, -1.0), std::domain_error);
    CHECK_THROWS_AS(connection_outage(p, -1.0, 1.0), std::domain_error);
}

TEST_CASE("secrecy outage") {
    const SystemParams p = reference();
    CHECK(secrecy_outage(p, 1e-14, 1.0) == doctest::Approx(1.0));
    CHECK(secrecy_outage(p, 1.0, 1.0) == doctest::Approx(0.0139942220280231962).epsilon(1e-12).scale(0));
    // Independent route: Gamma(1 + rho) Gamma(1 - rho) = pi rho / sin(pi rho).
    const double rho = 2.0 / 3.0;
    const double product = std::numbers::pi * rho / std::sin(std::numbers::pi * rho);
    const double by_reflection =
        1.0 - std::exp(-0.01 / (std::pow(10.0, rho) * 0.1 * (1.0 - std::exp(-1.0)) * product));
    CHECK(secrecy_outage(p, 1.0, 1.0) == doctest::Approx(by_reflection).epsilon(1e-12).scale(0));
    const SystemParams sparse = p.with([](auto& f) { f.lambda_e = 1e-15; });
    CHECK(secrecy_outage(sparse, 1.0, 1.0) < 1e-12);
    CHECK_THROWS_AS(secrecy_outage(p, 1.0, 0.0), std::domain_error);
}

TEST_CASE("beta_e_star") {
    const SystemParams p = reference();
    CHECK(beta_e_star(p, 1.0) == doctest::Approx(1.66049392752113267).epsilon(1e-12).scale(0));
    const double by_bisection = oracle::bisect_increasing(
        [&](double b) { return p.epsilon() - secrecy_outage(p, 1.0, b); }, 1e-3, 1e3);
    CHECK(beta_e_star(p, 1.0) == doctest::Approx(by_bisection).epsilon(1e-10).scale(0));
    CHECK(beta_e_star(p, 50.0) == doctest::Approx(0.834520798176643611).epsilon(1e-12).scale(0));
    for (double delta : {1e-6, 0.01, 0.5, 1.0, 3.0, 12.0}) {
        CHECK(secrecy_outage(p, delta, beta_e_star(p, delta)) == doctest::Approx(p.epsilon()).epsilon(1e-12).scale(0));
    }
}

TEST_CASE("beta_b_star") {
    const SystemParams p = reference();
    const double coefficient = derive_constants(p).a * specfun::lower_incomplete_gamma(5.0 / 3.0, 1.0);
    const double closed_form = oracle::beta_b_noiseless(coefficient, 2.0 / 3.0, p.sigma());
    CHECK(beta_b_star(p, 1.0) == doctest::Approx(closed_form).epsilon(1e-12).scale(0));
    CHECK(beta_b_star(p, 1.0) == doctest::Approx(0.0231639024197361465).epsilon(1e-12).scale(0));
    CHECK(connection_outage(p, 1.0, beta_b_star(p, 1.0)) == doctest::Approx(p.sigma()).epsilon(1e-13).scale(0));

    double previous = 0.0;
    for (double sigma = 0.01; sigma < 0.995; sigma += 0.01) {
        const double b = beta_b_star(p.with([&](auto& f) { f.sigma = sigma; }), 1.0);
        REQUIRE(b > previous);
        previous = b;
    }
    const double near_one = beta_b_star(p.with([](auto& f) { f.sigma = 1.0 - 1e-12; }), 1.0);
    CHECK(near_one == doctest::Approx(oracle::beta_b_noiseless(coefficient, 2.0 / 3.0, 1.0 - 1e-12)).epsilon(1e-9).scale(0));
    CHECK(near_one > 100.0 * beta_b_star(p, 1.0));
}

TEST_CASE("fixed points over random parameters") {
    oracle::ParamDraws draws(2024);
    for (int i = 0; i < 50; ++i) {
        const SystemParams p = draws.next();
        for (double delta : {1e-4, 0.05, 1.0, 7.0}) {
            REQUIRE(std::abs(connection_outage(p, delta, beta_b_star(p, delta)) - p.sigma()) < 1e-9);
            REQUIRE(std::abs(secrecy_outage(p, delta, beta_e_star(p, delta)) - p.epsilon()) < 1e-9);
        }
    }
}

TEST_CASE("monotonicity and the interference tradeoff") {
    const SystemParams p = SystemParams::defaults();
    for (double delta : {0.01, 0.3, 1.0, 4.0}) {
        double co = -1.0;
        double so = 2.0;
        for (double beta = 1e-3; beta < 1e3; beta *= 1.3) {
            const double c = connection_outage(p, delta, beta);
            const double s = secrecy_outage(p, delta, beta);
            // Strict except where the outage has saturated at 1 in double precision.
            REQUIRE((c > co || (c == 1.0 && co == 1.0)));
            REQUIRE((s < so || (s == 1.0 && so == 1.0)));
            co = c;
            so = s;
        }
    }
    for (double beta : {0.01, 1.0, 30.0}) {
        double co = -1.0;
        double so = 2.0;
        for (double delta = 0.01; delta < 8.0; delta *= 1.25) {
            const double c = connection_outage(p, delta, beta);
            const double s = secrecy_outage(p, delta, beta);
            REQUIRE((c > co || (c == 1.0 && co == 1.0)));
            REQUIRE((s < so || (s == 1.0 && so == 1.0)));
            co = c;
            so = s;
        }
    }
}

TEST_CASE("secrecy outage depends on powers only through their ratio") {
    const SystemParams p = SystemParams::defaults();
    const SystemParams q = p.with([](auto& f) {
        f.p_s *= 37.0;
        f.p_j *= 37.0;
    });
    for (double delta : {0.1, 1.0, 5.0}) {
        CHECK(secrecy_outage(q, delta, 0.7) == doctest::Approx(secrecy_outage(p, delta, 0.7)).epsilon(1e-13).scale(0));
    }
}

TEST_CASE("throughput composition") {
    const SystemParams p = SystemParams::defaults();
    const DesignPoint dp = throughput(p, 2e-5);
    CHECK(dp.r_t == doctest::Approx(std::log2(1.0 + dp.beta_b)).epsilon(1e-14).scale(0));
    CHECK(dp.r_e == doctest::Approx(std::log2(1.0 + dp.beta_e)).epsilon(1e-14).scale(0));
    CHECK(dp.mu == doctest::Approx((dp.r_t - dp.r_e) * 0.9).epsilon(1e-14).scale(0));

    // Infeasible secrecy clamps to zero.
    CHECK(throughput(p, 1.0).mu == 0.0);

    // Matching the eavesdropper density to make beta_E = beta_B zeroes mu.
    const double delta = 0.3;
    const DesignPoint ref = throughput(p, delta);
    const SystemParams matched = p.with([&](auto& f) {
        f.lambda_e *= std::pow(ref.beta_b / ref.beta_e, 2.0 / p.alpha());
    });
    const DesignPoint eq = throughput(matched, delta);
    CHECK(eq.beta_e == doctest::Approx(eq.beta_b).epsilon(1e-12).scale(0));
    CHECK(eq.mu < 1e-12);

    const SystemParams lonely = p.with([](auto& f) { f.lambda_e = 1e-14; });
    const DesignPoint no_eve = throughput(lonely, 0.5);
    CHECK(no_eve.r_e < 1e-9);
    CHECK(no_eve.mu == doctest::Approx(0.9 * no_eve.r_t).epsilon(1e-8).scale(0));
}

TEST_CASE("throughput derivative matches central differences") {
    oracle::ParamDraws draws(99);
    const double h = 1e-5;
    for (int draw = 0; draw < 4; ++draw) {
        const SystemParams p = draw == 0 ? SystemParams::defaults() : draws.next();
        for (double delta : oracle::log_grid(0.05, 10.0, 50)) {
            const double fd = (gap(p, delta + h) - gap(p, delta - h)) / (2.0 * h);
            const double an = throughput_derivative(p, delta);
            CAPTURE(delta);
            REQUIRE(std::abs(fd - an) <= 1e-4 * std::abs(an));
        }
    }
}

TEST_CASE("throughput derivative signs") {
    const SystemParams p = SystemParams::defaults();
    CHECK(throughput_derivative(p, 1e-9) > 0.0);
    const OptimizationResult r = optimize_delta(p);
    CHECK(std::abs(throughput_derivative(p, r.delta_star)) < 1e-6);
}

TEST_CASE("quasi-concavity of the secrecy throughput") {
    oracle::ParamDraws draws(5);
    for (int draw = 0; draw < 10; ++draw) {
        const SystemParams p = draw == 0 ? SystemParams::defaults() : draws.next();
        int last = 0;
        int reversals = 0;
        double previous = throughput(p, 1e-3).mu;
        for (double delta : oracle::log_grid(1e-3, 20.0, 200)) {
            const double mu = throughput(p, delta).mu;
            const double diff = mu - previous;
            previous = mu;
            const int sign = std::abs(diff) < 1e-12 ? 0 : (diff > 0 ? 1 : -1);
            if (sign == 0) continue;
            if (sign != last && last != 0) ++reversals;
            if (last == -1 && sign == 1) FAIL("throughput rises again after falling");
            last = sign;
        }
        CHECK(reversals <= 1);
    }
}

TEST_CASE("random selection baseline") {
    const SystemParams p = SystemParams::defaults();
    CHECK(random_baseline_throughput(p, 1e-300).mu == 0.0);
    CHECK_THROWS_AS(random_baseline_throughput(p, 0.0), std::domain_error);
    CHECK_THROWS_AS(random_baseline_throughput(p, 1.5), std::domain_error);

    for (double delta : oracle::log_grid(1e-6, 20.0, 60)) {
        const DesignPoint proposed = throughput(p, delta);
        const DesignPoint baseline = random_baseline_throughput(p, selection_probability(delta));
        REQUIRE(baseline.mu <= proposed.mu);
        REQUIRE(baseline.beta_e == doctest::Approx(proposed.beta_e).epsilon(1e-12).scale(0));
        REQUIRE(baseline.beta_b <= proposed.beta_b);
    }

    // Full retention on a density-matched field sees the same eavesdropper side.
    const double delta = 0.8;
    const SystemParams thinned = p.with([&](auto& f) { f.lambda_j *= selection_probability(delta); });
    const SelectionStats all = random_selection(1.0, 2.0 / p.alpha());
    CHECK(secrecy_outage(thinned, all, 0.4) == doctest::Approx(secrecy_outage(p, delta, 0.4)).epsilon(1e-13).scale(0));

    // Unbounded threshold selects everyone, exactly like full retention.
    const DesignPoint everyone = random_baseline_throughput(p, 1.0);
    const DesignPoint huge = throughput(p, 800.0);
    CHECK(everyone.beta_b == doctest::Approx(huge.beta_b).epsilon(1e-12).scale(0));
    CHECK(everyone.beta_e == doctest::Approx(huge.beta_e).epsilon(1e-12).scale(0));
}
