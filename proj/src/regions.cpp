#include "bfsmc/regions.hpp"

#include <cmath>

#include "bfsmc/errors.hpp"

namespace bfsmc {

std::string_view to_string(RegionLabel label) {
    switch (label) {
        case RegionLabel::Div1: return "Div1";
        case RegionLabel::Div2: return "Div2";
        case RegionLabel::Div3: return "Div3";
        case RegionLabel::Div4: return "Div4";
        case RegionLabel::Unclassified: break;
    }
    return "unclassified";
}

double saturation_boundary(double epsilon, double c1) {
    return c1 * epsilon / (c1 + 1.0);
}

double final_set_radius(double epsilon, double delta_bar) {
    return delta_bar * epsilon / (delta_bar + 1.0);
}

RegionBounds bounds(double epsilon, double c1, double delta_bar) {
    if (!(epsilon > 0.0)) throw DomainError("bounds: epsilon must be positive");
    if (!(c1 > 0.0)) throw DomainError("bounds: c1 must be positive");
    if (!(delta_bar >= 0.0)) throw DomainError("bounds: delta_bar must be non-negative");
    if (!(delta_bar < c1))
        throw InfeasibleError("bounds: requires delta_bar < c1 (actuator must dominate the disturbance)");
    return RegionBounds{
        .epsilon = epsilon,
        .x_final = final_set_radius(epsilon, delta_bar),
        .x_saturation = saturation_boundary(epsilon, c1),
        .c1 = c1,
        .delta_bar = delta_bar,
    };
}

RegionLabel classify(double x, const RegionBounds& b) {
    const double a = std::abs(x);
    if (a <= b.x_final) return RegionLabel::Div4;
    if (a <= b.x_saturation) return RegionLabel::Div3;
    if (a < b.epsilon) return RegionLabel::Div2;
    return RegionLabel::Div1;
}

}  // namespace bfsmc
