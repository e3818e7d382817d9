#pragma once

#include <optional>

#include "bfsmc/controller.hpp"
#include "bfsmc/model.hpp"
#include "bfsmc/simengine.hpp"

namespace bfsmc {

/// Sufficient constant magnitude 2 eps / (g1 tau) + u0 that pushes any |x0| < eps
/// out of the barrier within one sampling period.
double escape_magnitude(double epsilon, double g1, double tau, double u0);

/// Magnitude (eps - x0) / tau used for the illustrative experiment.
double escape_magnitude_sim(double epsilon, double x0, double tau);

enum class CertificateStatus { Certified, Falsified };

struct EscapeCertificate {
    double varpi = 0.0;  ///< base magnitude
    double rho = 1.0;    ///< applied disturbance is -rho * varpi (or the sign rule)
    double u0 = 0.0;     ///< control held over [t0, t1)
    double x0 = 0.0;
    double epsilon = 0.0;
    double tau = 0.0;
    /// rho varpi >= eps (1 + theta) / (g1 tau) + u0 with theta = |x0| / eps.
    bool predicted_exit = false;
    double verified_state = 0.0;  ///< x(t1) from simulation (last state if the run stopped earlier)
    std::optional<double> exit_time;
    /// Exit happened on an inner point strictly before the first resampling.
    bool exited_before_t1 = false;
    CertificateStatus status = CertificateStatus::Falsified;
};

struct EscapeSetup {
    ControllerSpec controller = BfaController{0.01};
    double x0 = 0.0;
    double tau = 0.01;
    double g1 = 1.0;
    double h_inner = 1e-6;
    double varpi = 0.0;
    double rho = 1.0;
    EscapeDirection direction = EscapeDirection::Negative;
    /// Gain seen by the plant. Defaults to the worst case g = g1.
    std::optional<GainProfile> gain;
};

/// Simulates two sampling periods under the escape disturbance and certifies
/// whether |x(t)| >= eps occurs for some t <= t1.
/// `trajectory_out`, when given, receives the simulated run.
EscapeCertificate verify_escape(const EscapeSetup& setup, Trajectory* trajectory_out = nullptr);

}  // namespace bfsmc
