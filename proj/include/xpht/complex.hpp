#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "xpht/geometry.hpp"
#include "xpht/image.hpp"

namespace xpht {

/// Closed cubical complex built from foreground pixels: one unit square per
/// pixel, shared vertices and edges deduplicated. Pixel (c, r) occupies
/// [c, c+1] x [r, r+1] with y growing downward (image rows).
struct ShapeComplex {
    std::vector<Vec2> vertices;                        // sorted by (x, y) when built from an image
    std::vector<std::array<std::int32_t, 2>> edges;    // vertex ids, a < b, list sorted
    std::vector<std::array<std::int32_t, 4>> squares;  // vertex ids ascending
    std::vector<std::array<std::int32_t, 4>> square_edges;
    std::vector<std::int32_t> component;  // per-vertex label, 0..component_count-1
    std::int32_t component_count = 0;

    std::int64_t vertex_count() const { return static_cast<std::int64_t>(vertices.size()); }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges.size()); }
    std::int64_t square_count() const { return static_cast<std::int64_t>(squares.size()); }
    std::int64_t euler_characteristic() const {
        return vertex_count() - edge_count() + square_count();
    }
};

ShapeComplex build_complex(const BinaryImage& image);

/// Bounded complementary regions: components - (V - E + F).
std::int32_t hole_count(const ShapeComplex& complex);

/// Evenly spaced unit directions v_i = (cos(2 pi i / N), sin(2 pi i / N)) for
/// i = 1..N, indexed 0-based (operator[](k) is v_{k+1}). N must be even.
/// Antipodal pairs are bit-exact negations; for N divisible by 4 quarter turns
/// are bit-exact as well.
class DirectionSet {
public:
    explicit DirectionSet(int n);

    int size() const { return static_cast<int>(dirs_.size()); }
    Vec2 operator[](int k) const { return dirs_[k]; }

private:
    std::vector<Vec2> dirs_;
};

/// Center of the shape from the per-direction support heights:
/// (2/N) * sum_i min_x <x, v_i> v_i. Maps a centered disc to its center and is
/// exactly equivariant under translation and positive scaling.
Vec2 derive_center(const ShapeComplex& complex, const DirectionSet& directions);

/// Translate by -center and rescale so the farthest vertex has norm 1.
ShapeComplex normalized(const ShapeComplex& complex, Vec2 center);

}  // namespace xpht
