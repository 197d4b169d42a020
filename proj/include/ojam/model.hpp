#pragma once

namespace ojam {

/// Converts a power in dBm to linear milliwatts.
double dbm_to_linear(double dbm);

/// Converts a power in linear milliwatts to dBm. Requires mw > 0.
double linear_to_dbm(double mw);

/// Physical and network constants of the wiretap scenario.
///
/// Powers are linear milliwatts, distances meters, densities points per m^2.
/// Instances are validated on construction (see make()), so every other part
/// of the library assumes the invariants hold.
class SystemParams {
public:
    struct Fields {
        double p_s;       ///< Alice transmit power [mW]
        double p_j;       ///< per-jammer transmit power [mW]
        double n0;        ///< noise power at Bob [mW]
        double d;         ///< Alice-Bob distance [m]
        double alpha;     ///< path-loss exponent, > 2
        double lambda_j;  ///< jammer density [1/m^2]
        double lambda_e;  ///< eavesdropper density [1/m^2]
        double sigma;     ///< connection outage budget in (0, 1)
        double epsilon;   ///< secrecy outage budget in (0, 1)
    };

    /// Validates and wraps the fields. Throws std::invalid_argument naming the
    /// first violated constraint.
    static SystemParams make(const Fields& fields);

    /// Parameters used for the published figures: d = 1 m, alpha = 3,
    /// sigma = 0.1, epsilon = 0.01, P_S = 20 dBm, P_J = 30 dBm, N0 = -90 dBm,
    /// lambda_J = 0.1, lambda_E = 0.01.
    static SystemParams defaults();

    double p_s() const { return f_.p_s; }
    double p_j() const { return f_.p_j; }
    double n0() const { return f_.n0; }
    double d() const { return f_.d; }
    double alpha() const { return f_.alpha; }
    double lambda_j() const { return f_.lambda_j; }
    double lambda_e() const { return f_.lambda_e; }
    double sigma() const { return f_.sigma; }
    double epsilon() const { return f_.epsilon; }
    const Fields& fields() const { return f_; }

    /// Copy with some fields replaced; the result is re-validated.
    template <typename Fn>
    SystemParams with(Fn&& edit) const {
        Fields copy = f_;
        edit(copy);
        return make(copy);
    }

private:
    explicit SystemParams(const Fields& f) : f_(f) {}
    Fields f_;
};

/// Shorthand constants shared by the outage and derivative formulas.
struct DerivedConstants {
    double rho;  ///< 2 / alpha
    double a;    ///< lambda_J pi Gamma(1 - rho) (d^alpha P_J / P_S)^rho
    double b;    ///< N0 d^alpha / P_S
    double c;    ///< lambda_E P_S^rho / (P_J^rho lambda_J Gamma(1 + rho) Gamma(1 - rho))
};

DerivedConstants derive_constants(const SystemParams& params);

} // namespace ojam
