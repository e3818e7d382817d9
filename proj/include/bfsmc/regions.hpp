#pragma once

#include <cstdint>
#include <string_view>

namespace bfsmc {

/// State-space partition around the barrier set |x| < eps.
///   Div4  |x| <= x_F            final set
///   Div3  x_F < |x| <= x_S      control dominates the disturbance
///   Div2  x_S < |x| < eps       barrier law would exceed c1
///   Div1  |x| >= eps            outside the barrier
/// Unclassified only appears in trajectories simulated without bounds.
enum class RegionLabel : std::uint8_t {
    Unclassified = 0,
    Div1 = 1,
    Div2 = 2,
    Div3 = 3,
    Div4 = 4,
};

std::string_view to_string(RegionLabel label);

struct RegionBounds {
    double epsilon = 0.0;
    double x_final = 0.0;       ///< delta_bar eps / (delta_bar + 1)
    double x_saturation = 0.0;  ///< c1 eps / (c1 + 1)
    double c1 = 0.0;
    double delta_bar = 0.0;

    bool operator==(const RegionBounds&) const = default;
};

/// Radius c1 eps / (c1 + 1) where |bfa| reaches c1.
double saturation_boundary(double epsilon, double c1);
/// Radius delta_bar eps / (delta_bar + 1) of the final set.
double final_set_radius(double epsilon, double delta_bar);

/// Throws InfeasibleError unless 0 <= delta_bar < c1, DomainError on eps <= 0 or c1 <= 0.
RegionBounds bounds(double epsilon, double c1, double delta_bar);

RegionLabel classify(double x, const RegionBounds& b);

}  // namespace bfsmc
