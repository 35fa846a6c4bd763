#pragma once

#include "xpht/image.hpp"

namespace xpht {

/// Disc on a square canvas; radius 0 means resolution / 3.
BinaryImage make_disc(int resolution, double radius = 0.0);

/// Pixels whose center lies between the two radii. Requires 0 < inner < outer.
BinaryImage make_annulus(int resolution, double inner_radius, double outer_radius);

/// Axis-aligned centered block.
BinaryImage make_rectangle(int canvas_width, int canvas_height, int rect_width, int rect_height);

/// Random 4-connected blob grown from the canvas center, unioned with its
/// mirror image about the plane through the center at the given angle.
/// target_pixels 0 picks a size proportional to the canvas area.
BinaryImage make_mirrored_blob(int resolution, unsigned seed, double plane_angle_degrees,
                               int target_pixels = 0);

}  // namespace xpht
