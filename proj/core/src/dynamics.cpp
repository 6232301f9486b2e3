#include "collapsim/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace collapsim {

namespace {
constexpr double kPi = std::numbers::pi;
}

bool BlochState::finite() const {
    return std::isfinite(theta) && std::isfinite(phi) && std::isfinite(xi) &&
           std::isfinite(log_norm);
}

void ModelParams::validate() const {
    std::ostringstream bad;
    if (!(j_coupling > 0.0)) bad << "j_coupling must be > 0; ";
    if (!(b0 >= 0.0)) bad << "b0 must be >= 0; ";
    if (n_spins < 2) bad << "n_spins must be >= 2; ";
    if (n_spins % 2 != 0) bad << "n_spins must be even; ";
    if (!(epsilon >= 0.0)) bad << "epsilon must be >= 0; ";
    if (!(hbar > 0.0)) bad << "hbar must be > 0; ";
    if (!std::isfinite(j_coupling) || !std::isfinite(b0) || !std::isfinite(epsilon) ||
        !std::isfinite(hbar))
        bad << "all fields must be finite; ";
    std::string msg = bad.str();
    if (!msg.empty()) throw std::invalid_argument("ModelParams: " + msg);
}

double theta_dot(const BlochState& state, const ModelParams& params, double chi) {
    const double theta = state.theta;
    // The poles are exact fixed points; sin(pi) is not exactly zero in
    // doubles, so pin them explicitly.
    if (theta == 0.0 || theta == kPi) return 0.0;
    return -params.collapse_rate() * std::sin(theta) *
           (std::cos(theta) - params.field_ratio() * std::cos(chi));
}

double phi_dot(const BlochState& state, const ModelParams& params) {
    return -params.j_coupling * static_cast<double>(params.n_spins) *
           std::cos(state.theta) / params.hbar;
}

double log_norm_dot(const BlochState& state, const ModelParams& params, double chi) {
    return 0.5 * params.collapse_rate() * std::cos(state.theta) *
           (std::cos(state.theta) - params.field_ratio() * std::cos(chi));
}

FixedPointSet interior_fixed_point(const ModelParams& params, double chi) {
    FixedPointSet set;
    set.poles = {0.0, kPi};
    const double c = params.field_ratio() * std::cos(chi);
    if (std::abs(c) <= 1.0) {
        set.interior = std::acos(c);
        set.interior_exists = true;
    }
    return set;
}

std::vector<FlowSample> flow_grid(const ModelParams& params, int theta_count,
                                  std::span<const double> chi_values) {
    if (theta_count < 2) throw std::invalid_argument("flow_grid: theta_count must be >= 2");
    std::vector<FlowSample> table;
    table.reserve(static_cast<std::size_t>(theta_count) * chi_values.size());
    for (double chi : chi_values) {
        for (int i = 0; i < theta_count; ++i) {
            // endpoints land exactly on the poles
            double theta = (i == theta_count - 1)
                               ? kPi
                               : kPi * static_cast<double>(i) / (theta_count - 1);
            BlochState s;
            s.theta = theta;
            table.push_back({theta, chi, theta_dot(s, params, chi)});
        }
    }
    return table;
}

MacroscopicProbability macroscopic_probability(double theta0, const ModelParams& params) {
    if (params.b0 == 0.0) {
        // no stochastic drive: deterministic flow by the sign of cos(theta0)
        double c = std::cos(theta0);
        double p = c > 0.0 ? 1.0 : (c < 0.0 ? 0.0 : 0.5);
        return {p, true};
    }
    double p = 0.5 * (1.0 + params.j_coupling / params.b0 * std::cos(theta0));
    if (p < 0.0) p = 0.0;
    if (p > 1.0) p = 1.0;
    return {p, false};
}

double born_weight(double theta0) {
    const double c = std::cos(0.5 * theta0);
    return c * c;
}

} // namespace collapsim
