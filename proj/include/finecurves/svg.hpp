#pragma once

#include <string>

#include "finecurves/curve.hpp"

namespace finecurves {

// Deterministic SVG rendering of a curve system. Charts are laid out side by
// side (base chart first); handle cylinders are drawn as dashed glyphs with
// dashed gluing indicators running to their mouth squares. One path element
// per curve carries all of its legs. Coordinates are fixed-point decimals
// computed by integer long division; no floating point.
std::string render_svg(const CurveSystem& sys);

// Writes render_svg(sys) to `path`; throws IoFailure.
void render_svg_file(const CurveSystem& sys, const std::string& path);

} // namespace finecurves
