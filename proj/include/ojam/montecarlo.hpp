#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ojam/model.hpp"
#include "ojam/rng.hpp"

namespace ojam::mc {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

double distance(Point a, Point b);

struct Jammer {
    Point position;
    double g_to_bob;  ///< exp(1) fading gain towards Bob
    bool selected;    ///< g_to_bob <= delta
};

struct Eve {
    Point position;
    double g_from_alice;  ///< exp(1) fading gain from Alice
};

/// One sampled world. Alice sits at the origin and Bob at (d, 0).
///
/// Jammer-to-Eve gains are not stored; they are drawn on demand from a
/// counter-based stream so only the pairs that are actually inspected cost
/// anything. Hand-built realizations may supply an explicit table instead;
/// with neither, every cross gain is 1.
class NetworkRealization {
public:
    double h_b = 1.0;
    std::vector<Jammer> jammers;
    std::vector<Eve> eves;
    /// Active jammers beyond the window, sampled directly from the thinned
    /// process when it is too sparse for the window to hold a fair sample.
    /// Their cross-gain index follows the window jammers.
    std::vector<Jammer> outer_jammers;
    /// Mean interference sum (sum of g D^-alpha, before P_J) contributed by
    /// active jammers beyond everything sampled. Zero disables it.
    double far_field_bob = 0.0;
    double far_field_eve = 0.0;

    double cross_gain(std::size_t jammer, std::size_t eve) const;

    /// Row-major [jammer][eve] table of explicit cross gains.
    void set_cross_gains(std::vector<double> table);
    void set_cross_gain_stream(const CounterRng& stream);

private:
    std::vector<double> cross_table_;
    std::optional<CounterRng> cross_stream_;
};

struct SimConfig {
    double radius = 50.0;          ///< sampling window radius [m]
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    unsigned threads = 1;          ///< 0 = hardware concurrency
    bool far_field_correction = true;
};

/// Expected number of active jammers the outer annulus is sized to hold.
inline constexpr double kOuterActiveJammers = 100.0;

/// Outer radius of the exactly-sampled region: the window radius, or larger
/// when the active-jammer density is too low for the window to hold about
/// kOuterActiveJammers of them.
double outer_radius(const SystemParams& params, double delta, const SimConfig& config);

/// Throws std::invalid_argument unless radius > 10 d and trials >= 1.
void validate(const SimConfig& config, const SystemParams& params);

struct OutageEstimate {
    double p_hat = 0.0;
    std::uint64_t trials = 0;
    double std_err = 0.0;

    static OutageEstimate from_count(std::uint64_t hits, std::uint64_t trials);
};

/// Homogeneous PPP of the given intensity on the disk of `radius` around `center`.
std::vector<Point> sample_ppp(double intensity, double radius, CounterRng& rng, Point center = {});

/// Samples trial `trial_index` of the network. Jammers are drawn on the
/// window around Bob, eavesdroppers on the window around Alice; the same
/// jammers interfere at Bob and at every eavesdropper. With the far-field
/// correction on, active jammers out to outer_radius() are sampled as well
/// and the mean of the remainder is added.
NetworkRealization realize(const SystemParams& params, double delta, const SimConfig& config,
                           std::uint64_t trial_index);

/// SINR at Bob; +infinity when neither noise nor active jammers are present.
double sinr_bob(const NetworkRealization& world, const SystemParams& params);

/// Largest SIR over eavesdroppers (noise-free). 0 with no eavesdroppers,
/// +infinity if some eavesdropper sees no jamming at all.
double max_sir_eves(const NetworkRealization& world, const SystemParams& params);

struct OutagePair {
    OutageEstimate connection;
    OutageEstimate secrecy;
};

/// Empirical connection outage P(SINR_B <= beta_b) and secrecy outage
/// P(max SIR >= beta_e). Results are identical for any thread count.
OutagePair estimate_outages(const SystemParams& params, double delta, double beta_b, double beta_e,
                            const SimConfig& config);

} // namespace ojam::mc
