#include "collapsim/noise.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "collapsim/csv.hpp"

namespace collapsim {

const char* to_string(NoiseMode mode) {
    switch (mode) {
        case NoiseMode::frozen: return "frozen";
        case NoiseMode::per_step: return "per_step";
        case NoiseMode::poisson_resample: return "poisson_resample";
    }
    return "?";
}

NoiseMode noise_mode_from_string(const std::string& name) {
    if (name == "frozen") return NoiseMode::frozen;
    if (name == "per_step") return NoiseMode::per_step;
    if (name == "poisson_resample") return NoiseMode::poisson_resample;
    throw std::invalid_argument("unknown noise mode: '" + name +
                                "' (expected frozen|per_step|poisson_resample)");
}

void NoiseConfig::validate() const {
    if (mode == NoiseMode::poisson_resample && !(tau_r > 0.0))
        throw std::invalid_argument("NoiseConfig: tau_r must be > 0 for poisson_resample");
    if (!std::isfinite(tau_r))
        throw std::invalid_argument("NoiseConfig: tau_r must be finite");
}

double sample_stationary_chi(StreamRng& rng) {
    return std::acos(rng.uniform_symmetric());
}

NoiseProcess::NoiseProcess(const NoiseConfig& config)
    : config_(config), rng_(config.seed, config.stream_id) {
    config_.validate();
    chi_ = sample_stationary_chi(rng_);
}

double NoiseProcess::advance(double dt) {
    switch (config_.mode) {
        case NoiseMode::frozen:
            break;
        case NoiseMode::per_step:
            chi_ = sample_stationary_chi(rng_);
            break;
        case NoiseMode::poisson_resample: {
            const double p_keep = std::exp(-dt / config_.tau_r);
            if (rng_.uniform() >= p_keep) chi_ = sample_stationary_chi(rng_);
            break;
        }
    }
    return chi_;
}

double NoisePath::value_at(double t) const {
    // index of the last jump at or before t
    auto it = std::upper_bound(times.begin(), times.end(), t);
    std::size_t idx = (it == times.begin()) ? 0 : static_cast<std::size_t>(it - times.begin() - 1);
    return values[idx];
}

NoisePath make_noise_path(double horizon, const NoiseConfig& config) {
    if (!(horizon > 0.0)) throw std::invalid_argument("make_noise_path: horizon must be > 0");
    config.validate();
    StreamRng rng(config.seed, config.stream_id);

    NoisePath path;
    path.horizon = horizon;
    path.times.push_back(0.0);
    path.values.push_back(sample_stationary_chi(rng));

    switch (config.mode) {
        case NoiseMode::frozen:
            break;
        case NoiseMode::per_step: {
            if (!(config.tau_r > 0.0))
                throw std::invalid_argument("make_noise_path: per_step needs tau_r = step > 0");
            for (double t = config.tau_r; t < horizon; t += config.tau_r) {
                path.times.push_back(t);
                path.values.push_back(sample_stationary_chi(rng));
            }
            break;
        }
        case NoiseMode::poisson_resample: {
            double t = rng.exponential(config.tau_r);
            while (t < horizon) {
                path.times.push_back(t);
                path.values.push_back(sample_stationary_chi(rng));
                t += rng.exponential(config.tau_r);
            }
            break;
        }
    }
    return path;
}

void write_noise_path_csv(std::ostream& out, const NoisePath& path) {
    out << "t_start,chi\n";
    for (std::size_t i = 0; i < path.times.size(); ++i)
        out << csv::number(path.times[i]) << ',' << csv::number(path.values[i]) << '\n';
}

} // namespace collapsim
