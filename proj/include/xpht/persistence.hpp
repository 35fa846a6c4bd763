#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "xpht/complex.hpp"
#include "xpht/geometry.hpp"

namespace xpht {

/// Filtration parameter: a real value tagged with the half of the extended
/// filtration it belongs to. The total order has Ord values ascending, Rel
/// values descending, and every Ord below every Rel.
enum class ThetaKind : std::uint8_t { Ord, Rel };

struct ThetaPoint {
    double value = 0.0;
    ThetaKind kind = ThetaKind::Ord;

    friend bool operator==(ThetaPoint a, ThetaPoint b) {
        return a.value == b.value && a.kind == b.kind;
    }
};

bool theta_leq(ThetaPoint a, ThetaPoint b);

enum class IntervalKind : std::uint8_t { Ordinary, Relative, Essential };

/// Half-open interval [birth, death) of one extended persistence class.
/// Kind follows the endpoint tags: (Ord,Ord) ordinary, (Rel,Rel) relative,
/// (Ord,Rel) essential. Zero-persistence intervals are never constructed.
struct XPHInterval {
    ThetaPoint birth;
    ThetaPoint death;
    std::int8_t degree = 0;
    IntervalKind kind = IntervalKind::Ordinary;

    double persistence() const {
        double d = birth.value - death.value;
        return d < 0 ? -d : d;
    }

    friend bool operator==(const XPHInterval& a, const XPHInterval& b) {
        return a.birth == b.birth && a.death == b.death && a.degree == b.degree &&
               a.kind == b.kind;
    }
};

/// Returns nullopt for zero-persistence intervals (dropped by convention).
/// Throws std::invalid_argument on a (Rel, Ord) tag pair or endpoint order
/// violations.
std::optional<XPHInterval> make_interval(ThetaPoint birth, ThetaPoint death, int degree);

/// Canonical order used for sorting and multiset comparison.
bool interval_less(const XPHInterval& a, const XPHInterval& b);

struct XPHDiagram {
    int degree = 0;
    std::vector<XPHInterval> intervals;
};

/// Exact multiset equality (sorted, bitwise value compare).
bool same_diagram(const XPHDiagram& a, const XPHDiagram& b);

struct DiagramPair {
    XPHDiagram degree0;
    XPHDiagram degree1;
};

/// One column of the coned filtration. Ascending cells carry the max vertex
/// height of the cell; cone cells carry the min vertex height of their base
/// and have chain dimension base + 1.
struct FiltrationEntry {
    double value = 0.0;
    std::uint8_t dim = 0;       // chain dimension, 0..3
    std::uint8_t cell_dim = 0;  // dimension of the underlying complex cell
    bool cone = false;
    std::int32_t cell = 0;  // index into vertices/edges/squares per cell_dim
};

/// Ascending cells sorted by (value, dim, cell id) followed by cone cells
/// sorted by (value descending, base dim, cell id); boundaries stored as
/// sorted row positions in CSR form. The cone of a cell sigma has boundary
/// sigma + cone(boundary sigma) with no apex, which makes the total complex
/// acyclic so every cell is paired by the reduction.
struct ConedFiltration {
    std::vector<FiltrationEntry> cells;
    std::vector<std::int32_t> boundary_offsets;  // cells.size() + 1 entries
    std::vector<std::int32_t> boundary_rows;
};

/// h_v(x) = <x, v>.
double height(Vec2 point, Vec2 direction);

ConedFiltration build_extended_filtration(const ShapeComplex& complex, Vec2 direction);

/// Column reduction of the coned boundary matrix over GF(2); returns the
/// degree-0 and degree-1 extended persistence diagrams. Degree >= 2 pairs are
/// discarded, zero-persistence intervals dropped.
std::pair<XPHDiagram, XPHDiagram> reduce_extended(const ConedFiltration& filtration);

/// Union-find fast path for degree 0 only; multiset-equal to the degree-0
/// output of reduce_extended.
XPHDiagram xph0_fast(const ShapeComplex& complex, Vec2 direction);

/// build_extended_filtration followed by reduce_extended.
std::pair<XPHDiagram, XPHDiagram> xph(const ShapeComplex& complex, Vec2 direction);

}  // namespace xpht
