#include "bfsmc/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bfsmc/detail/overloaded.hpp"
#include "bfsmc/errors.hpp"

namespace bfsmc {

using detail::overloaded;

double eval_gain(const GainProfile& profile, double t) {
    return std::visit(
        overloaded{
            [](const ConstantGain& c) { return c.value; },
            [t](const SquareWaveGain& p) {
                const double s = sign(std::sin(3.0 * std::numbers::pi * t));
                return p.g1 + (p.g2 - p.g1) * (1.0 + s) / 2.0;
            },
        },
        profile);
}

double DisturbanceSpec::intrinsic_bound() const {
    return std::visit(overloaded{
                          [](const ZeroDisturbance&) { return 0.0; },
                          [](const ConstantDisturbance& c) { return std::abs(c.value); },
                          [](const MixedDisturbance& p) { return p.delta_bar; },
                          [](const EscapeDisturbance& e) { return std::abs(e.magnitude); },
                          [](const SinusoidDisturbance& s) { return std::abs(s.amplitude); },
                      },
                      kind);
}

double DisturbanceSpec::delta_bar() const {
    return declared_bound.value_or(intrinsic_bound());
}

double eval_disturbance(const DisturbanceSpec& spec, double t, double /*x*/,
                        double last_sample_state) {
    const double ts = t + spec.phase;
    return std::visit(
        overloaded{
            [](const ZeroDisturbance&) { return 0.0; },
            [](const ConstantDisturbance& c) { return c.value; },
            [ts](const MixedDisturbance& p) {
                return p.delta_bar *
                       (0.7 * std::cos(10.0 * ts) + 0.3 * sign(std::cos(std::numbers::sqrt2 * ts)));
            },
            [last_sample_state](const EscapeDisturbance& e) {
                if (e.direction == EscapeDirection::Negative) return -e.magnitude;
                return e.magnitude * sign(last_sample_state);
            },
            [ts](const SinusoidDisturbance& s) { return s.amplitude * std::cos(s.frequency * ts); },
        },
        spec.kind);
}

void PlantSpec::validate() const {
    if (!(g1 > 0.0)) throw DomainError("plant: g1 must be positive");
    if (!(g2 >= g1)) throw DomainError("plant: g2 must be >= g1");
    std::visit(overloaded{
                   [&](const ConstantGain& c) {
                       if (!(c.value >= g1 && c.value <= g2))
                           throw DomainError("plant: constant gain outside [g1, g2]");
                   },
                   [&](const SquareWaveGain& p) {
                       if (!(p.g1 >= g1 && p.g2 <= g2 && p.g1 <= p.g2))
                           throw DomainError("plant: square-wave gain outside [g1, g2]");
                   },
               },
               gain);
    if (disturbance.declared_bound && *disturbance.declared_bound < disturbance.intrinsic_bound())
        throw DomainError("plant: declared disturbance bound below the signal's magnitude");
}

double normalize_plant(const RawPlantBounds& raw) {
    if (!(raw.g1 > 0.0)) throw DomainError("normalize_plant: g1 must be positive");
    if (raw.zeta_bar < 0.0) throw DomainError("normalize_plant: zeta_bar must be non-negative");
    return raw.zeta_bar / raw.g1;
}

}  // namespace bfsmc
