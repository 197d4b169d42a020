#pragma once

#include "ojam/model.hpp"

namespace ojam {

/// One operating point of the threshold design and everything it induces.
struct DesignPoint {
    double delta;   ///< selection threshold on the jammer-to-Bob gain
    double beta_b;  ///< SINR threshold meeting the connection outage budget
    double beta_e;  ///< SIR threshold meeting the secrecy outage budget
    double r_t;     ///< codeword rate log2(1 + beta_b) [bits/channel use]
    double r_e;     ///< redundancy rate log2(1 + beta_e) [bits/channel use]
    double mu;      ///< secrecy throughput max(0, r_t - r_e) (1 - sigma)
};

/// How the active jammer population looks from Bob and from the eavesdroppers.
///
/// bob_moment is E[g^rho ; jammer active] (expectation restricted to active
/// jammers, not conditioned), retention is the fraction of jammers active.
/// The cross gains towards eavesdroppers are always unconditioned exp(1).
struct SelectionStats {
    double bob_moment;
    double retention;
};

/// Jammers with gain to Bob at most delta are active.
SelectionStats threshold_selection(double delta, double rho);
/// A fraction `retention` of jammers is active, chosen independently of gains.
SelectionStats random_selection(double retention, double rho);

double selection_probability(double delta);
double selected_intensity(double delta, double lambda_j);
/// E[g^rho | g <= delta] for g ~ exp(1).
double conditional_gain_moment(double delta, double rho);

double connection_outage(const SystemParams& params, double delta, double beta_b);
double secrecy_outage(const SystemParams& params, double delta, double beta_e);
double connection_outage(const SystemParams& params, const SelectionStats& stats, double beta_b);
double secrecy_outage(const SystemParams& params, const SelectionStats& stats, double beta_e);

/// Smallest SIR threshold keeping the secrecy outage at epsilon (closed form).
double beta_e_star(const SystemParams& params, double delta);
double beta_e_star(const SystemParams& params, const SelectionStats& stats);

/// Largest SINR threshold keeping the connection outage at sigma. Found by
/// geometric bracket expansion from [0, 1] followed by bisection to full
/// double precision; throws NumericalError if no bracket is found within 200
/// doublings.
double beta_b_star(const SystemParams& params, double delta);
double beta_b_star(const SystemParams& params, const SelectionStats& stats);

DesignPoint throughput(const SystemParams& params, double delta);

/// d(R_t - R_e)/d delta in bits per unit threshold, from implicit
/// differentiation of the two active outage constraints.
double throughput_derivative(const SystemParams& params, double delta);

/// Same pipeline for gain-blind random selection with the given retention.
/// The reported delta is the density-matched threshold -ln(1 - retention).
DesignPoint random_baseline_throughput(const SystemParams& params, double retention);

} // namespace ojam
