#include "bfsmc/adversary.hpp"

#include <cmath>

#include "bfsmc/errors.hpp"

namespace bfsmc {

double escape_magnitude(double epsilon, double g1, double tau, double u0) {
    if (!(epsilon > 0.0) || !(g1 > 0.0) || !(tau > 0.0))
        throw DomainError("escape_magnitude: epsilon, g1 and tau must be positive");
    return 2.0 * epsilon / (g1 * tau) + u0;
}

double escape_magnitude_sim(double epsilon, double x0, double tau) {
    if (!(tau > 0.0)) throw DomainError("escape_magnitude_sim: tau must be positive");
    if (x0 > epsilon) throw DomainError("escape_magnitude_sim: requires x0 <= epsilon");
    return (epsilon - x0) / tau;
}

EscapeCertificate verify_escape(const EscapeSetup& setup, Trajectory* trajectory_out) {
    const auto eps = barrier_epsilon(setup.controller);
    if (!eps) throw DomainError("verify_escape: controller has no barrier width");
    if (!(setup.rho >= 1.0)) throw DomainError("verify_escape: rho must be >= 1");
    if (!(std::abs(setup.x0) < *eps)) throw DomainError("verify_escape: requires |x0| < epsilon");

    EscapeCertificate cert;
    cert.varpi = setup.varpi;
    cert.rho = setup.rho;
    cert.x0 = setup.x0;
    cert.epsilon = *eps;
    cert.tau = setup.tau;
    cert.u0 = evaluate(setup.controller, setup.x0);

    const double push = setup.rho * setup.varpi;
    if (setup.direction == EscapeDirection::Negative) {
        cert.predicted_exit = push > cert.u0 && setup.g1 * setup.tau * (push - cert.u0) >= *eps + setup.x0;
    } else {
        const double s = sign(setup.x0);
        const double speed = push + s * cert.u0;
        cert.predicted_exit = s != 0.0 && speed > 0.0 &&
                              setup.g1 * setup.tau * speed >= *eps - std::abs(setup.x0);
    }

    PlantSpec plant;
    if (setup.gain) {
        plant.gain = *setup.gain;
        if (const auto* sq = std::get_if<SquareWaveGain>(&*setup.gain)) {
            plant.g1 = sq->g1;
            plant.g2 = sq->g2;
        } else {
            plant.g1 = plant.g2 = std::get<ConstantGain>(*setup.gain).value;
        }
    } else {
        plant.g1 = plant.g2 = setup.g1;
        plant.gain = ConstantGain{setup.g1};
    }
    plant.disturbance.kind = EscapeDisturbance{push, setup.direction};

    SimConfig cfg;
    cfg.x0 = setup.x0;
    cfg.tau = setup.tau;
    cfg.h_inner = setup.h_inner;
    cfg.t0 = 0.0;
    cfg.t_end = 2.0 * setup.tau;
    cfg.record_stride = 1;

    Trajectory traj = run(plant, setup.controller, cfg);

    // Every inner point is recorded, so row i is inner step i.
    const std::size_t t1_row = cfg.steps_per_sample();
    cert.verified_state = t1_row < traj.size() ? traj.x[t1_row] : traj.x.back();
    std::optional<std::size_t> exit_row;
    for (std::size_t i = 0; i < traj.size(); ++i) {
        if (!(std::abs(traj.x[i]) < *eps)) {
            exit_row = i;
            cert.exit_time = traj.t[i];
            break;
        }
    }
    cert.exited_before_t1 = exit_row && *exit_row < t1_row;
    cert.status = exit_row && *exit_row <= t1_row ? CertificateStatus::Certified
                                                  : CertificateStatus::Falsified;
    if (trajectory_out) *trajectory_out = std::move(traj);
    return cert;
}

}  // namespace bfsmc
