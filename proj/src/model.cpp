#include "ojam/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ojam/specfun.hpp"

namespace ojam {

double dbm_to_linear(double dbm) {
    return std::pow(10.0, dbm / 10.0);
}

double linear_to_dbm(double mw) {
    if (!(mw > 0.0)) throw std::domain_error("linear_to_dbm: power must be positive");
    return 10.0 * std::log10(mw);
}

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("invalid system parameters: ") + what);
}

bool finite(double x) { return std::isfinite(x); }

} // namespace

SystemParams SystemParams::make(const Fields& f) {
    require(finite(f.p_s) && f.p_s > 0.0, "p_s must be positive");
    require(finite(f.p_j) && f.p_j > 0.0, "p_j must be positive");
    require(finite(f.n0) && f.n0 >= 0.0, "n0 must be nonnegative");
    require(finite(f.d) && f.d > 0.0, "d must be positive");
    require(finite(f.alpha) && f.alpha > 2.0, "alpha must exceed 2");
    require(finite(f.lambda_j) && f.lambda_j > 0.0, "lambda_j must be positive");
    require(finite(f.lambda_e) && f.lambda_e > 0.0, "lambda_e must be positive");
    require(f.sigma > 0.0 && f.sigma < 1.0, "sigma must lie in (0, 1)");
    require(f.epsilon > 0.0 && f.epsilon < 1.0, "epsilon must lie in (0, 1)");
    return SystemParams(f);
}

SystemParams SystemParams::defaults() {
    return make({
        .p_s = dbm_to_linear(20.0),
        .p_j = dbm_to_linear(30.0),
        .n0 = dbm_to_linear(-90.0),
        .d = 1.0,
        .alpha = 3.0,
        .lambda_j = 0.1,
        .lambda_e = 0.01,
        .sigma = 0.1,
        .epsilon = 0.01,
    });
}

DerivedConstants derive_constants(const SystemParams& p) {
    const double rho = 2.0 / p.alpha();
    const double d_alpha = std::pow(p.d(), p.alpha());
    const double g_minus = specfun::gamma(1.0 - rho);
    const double g_plus = specfun::gamma(1.0 + rho);
    DerivedConstants k{};
    k.rho = rho;
    k.a = p.lambda_j() * std::numbers::pi * g_minus * std::pow(d_alpha * p.p_j() / p.p_s(), rho);
    k.b = p.n0() * d_alpha / p.p_s();
    k.c = p.lambda_e() * std::pow(p.p_s() / p.p_j(), rho) / (p.lambda_j() * g_plus * g_minus);
    return k;
}

} // namespace ojam
