#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "collapsim/rng.hpp"

namespace collapsim {

// How the field angle chi(t) evolves:
//   frozen           — one stationary draw, constant forever
//   per_step         — fresh stationary draw every integration step
//   poisson_resample — redrawn at Poisson jump times with mean waiting
//                      time tau_r, giving exactly exponential
//                      autocorrelation of cos(chi)
enum class NoiseMode { frozen, per_step, poisson_resample };

const char* to_string(NoiseMode mode);
NoiseMode noise_mode_from_string(const std::string& name);

struct NoiseConfig {
    NoiseMode mode = NoiseMode::frozen;
    double tau_r = 0.1;          // correlation time; for per_step this is the step itself
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0; // per-trajectory substream

    void validate() const; // throws std::invalid_argument
};

// One stationary draw: chi = arccos(u), u uniform on [-1, 1], so the
// marginal density is sin(chi)/2 on [0, pi] and cos(chi) is uniform.
double sample_stationary_chi(StreamRng& rng);

// Stateful chi(t) generator owning its private random stream.
class NoiseProcess {
public:
    explicit NoiseProcess(const NoiseConfig& config);

    double current() const { return chi_; }

    // Move the process forward by dt and return the value that rules the
    // NEXT interval. frozen: no-op. per_step: fresh draw. poisson_resample:
    // redraw with probability 1 - exp(-dt/tau_r).
    double advance(double dt);

private:
    NoiseConfig config_;
    StreamRng rng_;
    double chi_;
};

// Materialized realization: chi is values[i] on [times[i], times[i+1]),
// right-continuous, with times[0] == 0.
struct NoisePath {
    std::vector<double> times;
    std::vector<double> values;
    double horizon = 0.0;

    double value_at(double t) const;
};

// Full jump path over [0, horizon], so that two integrators can consume an
// identical realization.
NoisePath make_noise_path(double horizon, const NoiseConfig& config);

void write_noise_path_csv(std::ostream& out, const NoisePath& path); // t_start, chi

} // namespace collapsim
