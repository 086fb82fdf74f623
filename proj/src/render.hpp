#pragma once

#include <optional>
#include <string>

#include "coincidence.hpp"
#include "shifted.hpp"

namespace hexcsl {

enum class Scene { lattice, shifted_lattice, honeycomb, csl_overlay, csml_overlay };

Scene scene_from_name(const std::string& name);
std::string scene_name(Scene s);

struct RenderStyle {
    double scale = 28.0;        // pixels per lattice unit
    double point_radius = 3.0;  // pixels
};

struct RenderSpec {
    Scene scene = Scene::lattice;
    Rational radius = Rational(6);
    std::optional<CoincidenceIsometry> rotation;  // required for the overlays
    std::optional<RationalShift> shift;
    bool fundamental_domain = false;
    RenderStyle style;
};

/// Deterministic SVG 1.1 figure: fixed element order, 6-decimal coordinates.
std::string render_svg(const RenderSpec& spec);

}  // namespace hexcsl
