#pragma once

#include <functional>
#include <vector>

namespace snm {

struct OdeOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double h_init = 1e-3;
    double h_min = 1e-13;
    double h_max = 0.1;
    long max_steps = 2000000;
};

enum class OdeOutcome {
    ReachedEnd,      ///< integrated to the requested endpoint
    StopTriggered,   ///< stop predicate fired; s/y hold the located event
    StepUnderflow,   ///< step size collapsed below h_min
    MaxSteps,
};

struct OdeResult {
    OdeOutcome outcome;
    double s = 0.0;
    std::vector<double> y;
    long n_accepted = 0;
};

using OdeRhs = std::function<void(double, const std::vector<double>&, std::vector<double>&)>;
using OdePredicate = std::function<bool(double, const std::vector<double>&)>;
using OdeObserver = std::function<void(double, const std::vector<double>&)>;

/// Embedded Dormand-Prince 5(4) integrator with PI-free step control.
/// Integrates from s0 to s1 (either direction). When `stop` returns true the
/// integration halts and the event location is refined by bisection on the
/// step; `observer` is called at every accepted step including the start.
OdeResult integrate_ode(const OdeRhs& rhs, std::vector<double> y0, double s0, double s1,
                        const OdeOptions& opts = {}, const OdePredicate& stop = nullptr,
                        const OdeObserver& observer = nullptr);

}  // namespace snm
