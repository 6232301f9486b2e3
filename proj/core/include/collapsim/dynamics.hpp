#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace collapsim {

// Pointer-state coordinates: polar weight angle theta in [0, pi], relative
// phase phi (wrapped to [-pi, pi)), overall phase xi, and log of the
// wave-function norm. All fields must stay finite.
struct BlochState {
    double theta = 0.0;
    double phi = 0.0;
    double xi = 0.0;
    double log_norm = 0.0;

    bool finite() const;
};

// Physical constants of the collapse model. collapse_rate() = J*N*eps/hbar
// sets the reduction speed; field_ratio() = B0/J sets the relative strength
// of the stochastic drive.
struct ModelParams {
    double j_coupling = 1.0;
    double b0 = 1.0;
    std::int64_t n_spins = 100; // even, >= 2
    double epsilon = 0.01;
    double hbar = 1.0;

    double collapse_rate() const { return j_coupling * static_cast<double>(n_spins) * epsilon / hbar; }
    double field_ratio() const { return b0 / j_coupling; }
    // characteristic reduction time; the mesoscopic regime boundary sits at
    // tau_r = collapse_time() when epsilon = hbar = 1
    double collapse_time() const { return 0.5 / collapse_rate(); }

    // throws std::invalid_argument listing every violated constraint
    void validate() const;
};

// d(theta)/dt of the weight angle under an instantaneous field angle chi.
// Vanishes identically (exactly, including in floating point) at the poles.
double theta_dot(const BlochState& state, const ModelParams& params, double chi);

// d(phi)/dt: mean-field phase precession, independent of epsilon and chi.
double phi_dot(const BlochState& state, const ModelParams& params);

// d(xi)/dt: the overall phase does not move.
constexpr double xi_dot() { return 0.0; }

// d(log n)/dt: norm growth/decay of the non-unitary evolution.
double log_norm_dot(const BlochState& state, const ModelParams& params, double chi);

// Fixed points of the theta flow at fixed chi: the poles always, plus an
// interior root at arccos(b cos chi) when |b cos chi| <= 1.
struct FixedPointSet {
    std::array<double, 2> poles{};
    std::optional<double> interior;
    bool interior_exists = false;
};

FixedPointSet interior_fixed_point(const ModelParams& params, double chi);

struct FlowSample {
    double theta;
    double chi;
    double rate;
};

// Dense theta_dot table over theta_count equally spaced theta values in
// [0, pi] for each requested chi.
std::vector<FlowSample> flow_grid(const ModelParams& params, int theta_count,
                                  std::span<const double> chi_values);

// P(collapse to |up,down>) for a frozen field direction, clamped to [0, 1].
// b0 = 0 has no stochastic drive; the outcome is the deterministic step
// function and the result is flagged instead of raising an error.
struct MacroscopicProbability {
    double value;
    bool degenerate_field;
};

MacroscopicProbability macroscopic_probability(double theta0, const ModelParams& params);

// Squared weight of |up,down> in the initial superposition.
double born_weight(double theta0);

} // namespace collapsim
