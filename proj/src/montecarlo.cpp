#include "ojam/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace ojam::mc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// D^-alpha from a squared distance.
double path_gain(Point a, Point b, double alpha) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::pow(dx * dx + dy * dy, -0.5 * alpha);
}

Point bob_position(const SystemParams& p) { return {p.d(), 0.0}; }

// Cross-gain indices of every transmitting jammer: selected window jammers,
// then the outer ones.
std::vector<std::size_t> selected_indices(const NetworkRealization& w) {
    std::vector<std::size_t> out;
    out.reserve(w.jammers.size() + w.outer_jammers.size());
    for (std::size_t i = 0; i < w.jammers.size(); ++i) {
        if (w.jammers[i].selected) out.push_back(i);
    }
    for (std::size_t k = 0; k < w.outer_jammers.size(); ++k) out.push_back(w.jammers.size() + k);
    return out;
}

Point jammer_position(const NetworkRealization& w, std::size_t index) {
    return index < w.jammers.size() ? w.jammers[index].position
                                    : w.outer_jammers[index - w.jammers.size()].position;
}

// Interference sum at eavesdropper j, accumulated in jammer index order. Stops
// early (returning a value above `stop_above`) once the partial sum exceeds it.
double eve_interference(const NetworkRealization& w, const std::vector<std::size_t>& active,
                        std::size_t j, double alpha, double stop_above) {
    const Point at = w.eves[j].position;
    double sum = w.far_field_eve;
    for (const std::size_t i : active) {
        sum += w.cross_gain(i, j) * path_gain(jammer_position(w, i), at, alpha);
        if (sum > stop_above) break;
    }
    return sum;
}

double eve_sir(const NetworkRealization& w, const SystemParams& p, std::size_t j,
               double interference) {
    if (interference == 0.0) return kInf;
    const double signal =
        p.p_s() * w.eves[j].g_from_alice * path_gain(w.eves[j].position, Point{}, p.alpha());
    return signal / (p.p_j() * interference);
}

// Same event as max_sir_eves(w, p) >= beta_e, without summing interference
// that can no longer change the verdict for an eavesdropper.
bool secrecy_outage_event(const NetworkRealization& w, const SystemParams& p, double beta_e) {
    const auto active = selected_indices(w);
    for (std::size_t j = 0; j < w.eves.size(); ++j) {
        const double signal =
            p.p_s() * w.eves[j].g_from_alice * path_gain(w.eves[j].position, Point{}, p.alpha());
        const double safe_above = signal / (p.p_j() * beta_e) * (1.0 + 1e-12);
        const double interference = eve_interference(w, active, j, p.alpha(), safe_above);
        if (interference > safe_above) continue;
        if (eve_sir(w, p, j, interference) >= beta_e) return true;
    }
    return false;
}

// Visits the points of a homogeneous PPP on the annulus r_in < r <= r_out in
// order of increasing radius. Squared radii of a planar PPP are the arrival
// times of a 1-D Poisson process of rate intensity * pi, so the points inside
// any radius do not depend on how far out the sampling goes: windows of
// different size share their common part exactly.
template <typename Visit>
void for_each_ppp_point(double intensity, double r_in, double r_out, CounterRng& rng, Point center,
                        Visit&& visit) {
    if (intensity == 0.0) return;
    const double rate = intensity * std::numbers::pi;
    const double s_in = r_in * r_in;
    const double s_out = r_out * r_out;
    double s = 0.0;
    while (true) {
        s += rng.exponential() / rate;
        if (s > s_out) return;
        const double theta = 2.0 * std::numbers::pi * rng.uniform();
        if (s <= s_in) continue;
        const double r = std::sqrt(s);
        visit(Point{center.x + r * std::cos(theta), center.y + r * std::sin(theta)});
    }
}

} // namespace

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

double outer_radius(const SystemParams& p, double delta, const SimConfig& c) {
    const double active = p.lambda_j() * -std::expm1(-delta);
    const double needed = std::sqrt(kOuterActiveJammers / (std::numbers::pi * active));
    return std::max(c.radius, needed);
}

double NetworkRealization::cross_gain(std::size_t jammer, std::size_t eve) const {
    if (!cross_table_.empty()) return cross_table_.at(jammer * eves.size() + eve);
    if (cross_stream_) {
        const std::uint64_t position = (static_cast<std::uint64_t>(eve) << 32) | jammer;
        return -std::log(CounterRng::to_open_unit(cross_stream_->at(position)));
    }
    return 1.0;
}

void NetworkRealization::set_cross_gains(std::vector<double> table) {
    if (table.size() != jammers.size() * eves.size()) {
        throw std::invalid_argument("cross gain table must have jammers x eves entries");
    }
    cross_table_ = std::move(table);
}

void NetworkRealization::set_cross_gain_stream(const CounterRng& stream) {
    cross_stream_ = stream;
}

void validate(const SimConfig& c, const SystemParams& p) {
    if (!(c.radius > 10.0 * p.d()) || !std::isfinite(c.radius)) {
        throw std::invalid_argument("simulation radius must exceed 10 d");
    }
    if (c.trials < 1) throw std::invalid_argument("simulation needs at least one trial");
}

OutageEstimate OutageEstimate::from_count(std::uint64_t hits, std::uint64_t trials) {
    OutageEstimate e;
    e.trials = trials;
    e.p_hat = static_cast<double>(hits) / static_cast<double>(trials);
    e.std_err = std::sqrt(e.p_hat * (1.0 - e.p_hat) / static_cast<double>(trials));
    return e;
}

std::vector<Point> sample_ppp(double intensity, double radius, CounterRng& rng, Point center) {
    if (!(intensity >= 0.0)) throw std::domain_error("sample_ppp: intensity must be nonnegative");
    if (!(radius > 0.0)) throw std::domain_error("sample_ppp: radius must be positive");
    std::vector<Point> points;
    for_each_ppp_point(intensity, 0.0, radius, rng, center, [&](Point q) { points.push_back(q); });
    return points;
}

NetworkRealization realize(const SystemParams& p, double delta, const SimConfig& c,
                           std::uint64_t trial) {
    if (!(delta > 0.0)) throw std::domain_error("realize: delta must be positive");
    NetworkRealization w;

    CounterRng jammer_points(c.seed, trial, Stream::JammerPoints);
    CounterRng jammer_gains(c.seed, trial, Stream::JammerGains);
    const auto jammer_positions = sample_ppp(p.lambda_j(), c.radius, jammer_points, bob_position(p));
    w.jammers.reserve(jammer_positions.size());
    for (const Point& pos : jammer_positions) {
        const double g = jammer_gains.exponential();
        w.jammers.push_back({pos, g, g <= delta});
    }

    CounterRng eve_points(c.seed, trial, Stream::EvePoints);
    CounterRng eve_gains(c.seed, trial, Stream::EveGains);
    for (const Point& pos : sample_ppp(p.lambda_e(), c.radius, eve_points)) {
        w.eves.push_back({pos, eve_gains.exponential()});
    }

    CounterRng direct(c.seed, trial, Stream::DirectLink);
    w.h_b = direct.exponential();
    w.set_cross_gain_stream(CounterRng(c.seed, trial, Stream::CrossGains));

    if (c.far_field_correction) {
        const double alpha = p.alpha();
        const double retention = -std::expm1(-delta);
        const double r_out = outer_radius(p, delta, c);
        if (r_out > c.radius) {
            // Thinned process on the annulus: active jammers only, with the
            // gain towards Bob drawn from exp(1) conditioned on g <= delta.
            CounterRng outer_points(c.seed, trial, Stream::OuterPoints);
            CounterRng outer_gains(c.seed, trial, Stream::OuterGains);
            for_each_ppp_point(p.lambda_j() * retention, c.radius, r_out, outer_points, bob_position(p),
                               [&](Point q) {
                                   const double g = -std::log1p(-retention * outer_gains.uniform());
                                   w.outer_jammers.push_back({q, g, true});
                               });
        }
        // Campbell: mean of sum g D^-alpha over active jammers beyond r_out,
        // seen from the window centre, is lambda E[g; active] 2 pi r_out^(2-alpha) / (alpha - 2).
        const double ring = 2.0 * std::numbers::pi * std::pow(r_out, 2.0 - alpha) / (alpha - 2.0);
        const double active_gain_mean = std::isinf(delta) ? 1.0 : retention - delta * std::exp(-delta);
        w.far_field_bob = p.lambda_j() * active_gain_mean * ring;
        w.far_field_eve = p.lambda_j() * retention * ring;
    }
    return w;
}

double sinr_bob(const NetworkRealization& w, const SystemParams& p) {
    const Point bob = bob_position(p);
    double interference = w.far_field_bob;
    for (const Jammer& j : w.jammers) {
        if (j.selected) interference += j.g_to_bob * path_gain(j.position, bob, p.alpha());
    }
    for (const Jammer& j : w.outer_jammers) {
        interference += j.g_to_bob * path_gain(j.position, bob, p.alpha());
    }
    const double denominator = p.p_j() * interference + p.n0();
    if (denominator == 0.0) return kInf;
    return p.p_s() * w.h_b * std::pow(p.d(), -p.alpha()) / denominator;
}

double max_sir_eves(const NetworkRealization& w, const SystemParams& p) {
    const auto active = selected_indices(w);
    double best = 0.0;
    for (std::size_t j = 0; j < w.eves.size(); ++j) {
        const double interference = eve_interference(w, active, j, p.alpha(), kInf);
        const double sir = eve_sir(w, p, j, interference);
        if (sir == kInf) return kInf;
        best = std::max(best, sir);
    }
    return best;
}

OutagePair estimate_outages(const SystemParams& p, double delta, double beta_b, double beta_e,
                            const SimConfig& c) {
    validate(c, p);
    if (c.trials < 100) throw std::invalid_argument("estimate_outages: need at least 100 trials");
    if (!(beta_b >= 0.0)) throw std::domain_error("estimate_outages: beta_b must be nonnegative");
    if (!(beta_e > 0.0)) throw std::domain_error("estimate_outages: beta_e must be positive");

    unsigned threads = c.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : c.threads;
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, c.trials));

    struct Counts {
        std::uint64_t connection = 0;
        std::uint64_t secrecy = 0;
    };
    std::vector<Counts> partial(threads);
    auto run = [&](unsigned worker) {
        const std::uint64_t begin = c.trials * worker / threads;
        const std::uint64_t end = c.trials * (worker + 1) / threads;
        Counts local;
        for (std::uint64_t t = begin; t < end; ++t) {
            const NetworkRealization w = realize(p, delta, c, t);
            if (sinr_bob(w, p) <= beta_b) ++local.connection;
            if (secrecy_outage_event(w, p, beta_e)) ++local.secrecy;
        }
        partial[worker] = local;
    };

    if (threads == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned k = 0; k < threads; ++k) pool.emplace_back(run, k);
    }

    Counts total;
    for (const Counts& k : partial) {
        total.connection += k.connection;
        total.secrecy += k.secrecy;
    }
    return {OutageEstimate::from_count(total.connection, c.trials),
            OutageEstimate::from_count(total.secrecy, c.trials)};
}

} // namespace ojam::mc
