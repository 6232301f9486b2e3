#pragma once

#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "collapsim/dynamics.hpp"
#include "collapsim/noise.hpp"

namespace collapsim {

// Fixed-step RK4 configuration. dt is the noise-resolution step: chi is
// held constant across one step and may change only between steps. When a
// step is stiff (large collapse_rate * dt * (1 + b)), the deterministic
// flow inside the step is integrated with `substeps` internal RK4 stages;
// substeps = 0 picks this automatically from a linear stability bound.
struct IntegratorConfig {
    double dt = 1e-3;
    long max_steps = 8000;
    double pole_threshold = 1e-3; // delta-theta defining the collapsed regions
    long record_stride = 0;       // 0 = outcomes only
    long substeps = 0;            // RK4 stages per noise step; 0 = auto

    void validate() const; // throws std::invalid_argument
    long resolved_substeps(const ModelParams& params) const;
};

enum class Outcome { up_down, down_up, unresolved };

const char* to_string(Outcome outcome);

struct PathSample {
    double t;
    double theta;
    double phi;
    double xi;
    double log_norm;
    double chi;
};

struct TrajectoryRecord {
    double theta0 = 0.0;
    double phi0 = 0.0;
    Outcome outcome = Outcome::unresolved;
    long steps_used = 0;
    BlochState final_state;
    std::vector<PathSample> samples; // empty unless record_stride > 0
};

// Outcome used for statistics: unresolved trajectories count by hemisphere
// (theta < pi/2 -> up_down) but keep their flag in the record.
Outcome hemisphere_outcome(const TrajectoryRecord& record);

class IntegrationError : public std::runtime_error {
public:
    IntegrationError(long step_index, const std::string& what)
        : std::runtime_error(what), step_index(step_index) {}
    long step_index;
};

// One classical RK4 update of (theta, phi, xi, log_norm) with chi constant.
// theta is clamped to [0, pi] afterwards (overshoot past a pole is a
// discretization artifact; the poles are exact fixed points of the flow)
// and phi is wrapped to [-pi, pi).
BlochState step_rk4(const BlochState& state, double chi, const ModelParams& params, double dt);

// Integrate from (theta0, phi0) until theta enters a pole region or
// max_steps noise steps have elapsed. Exact pole inputs short-circuit.
// Throws IntegrationError if the state stops being finite.
TrajectoryRecord integrate_trajectory(double theta0, double phi0, const ModelParams& params,
                                      const NoiseConfig& noise, const IntegratorConfig& config);

// Same dynamics, but chi is read from a materialized path so that a second
// integrator can consume the identical realization. Runs over
// min(max_steps, floor(path.horizon / dt)) steps; jump times are snapped to
// the step grid by sampling the path at each step start.
TrajectoryRecord integrate_on_path(double theta0, double phi0, const ModelParams& params,
                                   const NoisePath& path, const IntegratorConfig& config);

void write_trajectory_csv(std::ostream& out, const TrajectoryRecord& record);

} // namespace collapsim
