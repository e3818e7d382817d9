#pragma once

#include <variant>
#include <optional>

namespace bfsmc {

/// sign with sign(0) = 0.
constexpr double sign(double v) noexcept { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

// ---------------------------------------------------------------------------
// Input gain g(t, x)

struct ConstantGain {
    double value = 1.0;

    bool operator==(const ConstantGain&) const = default;
};

/// g(t) = g1 + (g2 - g1) * (1 + sign(sin 3 pi t)) / 2
struct SquareWaveGain {
    double g1 = 1.0;
    double g2 = 1.5;

    bool operator==(const SquareWaveGain&) const = default;
};

using GainProfile = std::variant<ConstantGain, SquareWaveGain>;

double eval_gain(const GainProfile& profile, double t);

// ---------------------------------------------------------------------------
// Matched disturbance delta(t, x)

struct ZeroDisturbance {
    bool operator==(const ZeroDisturbance&) const = default;
};

struct ConstantDisturbance {
    double value = 0.0;

    bool operator==(const ConstantDisturbance&) const = default;
};

/// delta(t) = delta_bar * (0.7 cos(10 t) + 0.3 sign(cos(sqrt(2) t)))
struct MixedDisturbance {
    double delta_bar = 0.0;

    bool operator==(const MixedDisturbance&) const = default;
};

enum class EscapeDirection {
    Negative,    ///< delta = -magnitude
    FollowSign,  ///< delta = magnitude * sign(last sampled state)
};

struct EscapeDisturbance {
    double magnitude = 0.0;
    EscapeDirection direction = EscapeDirection::Negative;

    bool operator==(const EscapeDisturbance&) const = default;
};

/// delta(t) = amplitude * cos(frequency * t)
struct SinusoidDisturbance {
    double amplitude = 0.0;
    double frequency = 1.0;

    bool operator==(const SinusoidDisturbance&) const = default;
};

using DisturbanceKind = std::variant<ZeroDisturbance, ConstantDisturbance, MixedDisturbance,
                                     EscapeDisturbance, SinusoidDisturbance>;

struct DisturbanceSpec {
    DisturbanceKind kind = ZeroDisturbance{};
    /// Time offset added to t for the time-varying variants.
    double phase = 0.0;
    /// Declared worst-case bound. When unset the intrinsic magnitude is used.
    std::optional<double> declared_bound;

    /// Worst-case magnitude delta_bar.
    double delta_bar() const;
    /// Largest value the signal can actually take.
    double intrinsic_bound() const;

    bool operator==(const DisturbanceSpec&) const = default;
};

double eval_disturbance(const DisturbanceSpec& spec, double t, double x, double last_sample_state);

// ---------------------------------------------------------------------------

/// Normalized plant  x' = g(t,x) (delta(t,x) + u).
struct PlantSpec {
    double g1 = 1.0;
    double g2 = 1.0;
    GainProfile gain = ConstantGain{1.0};
    DisturbanceSpec disturbance;

    /// Throws DomainError unless 0 < g1 <= g2 and the profile stays in [g1, g2].
    void validate() const;

    bool operator==(const PlantSpec&) const = default;
};

/// Bounds of the un-normalized plant x' = g u + zeta.
struct RawPlantBounds {
    double zeta_bar = 0.0;
    double g1 = 1.0;

    bool operator==(const RawPlantBounds&) const = default;
};

/// delta_bar = zeta_bar / g1.
double normalize_plant(const RawPlantBounds& raw);

}  // namespace bfsmc
