#pragma once

#include <utility>
#include <vector>

#include "xpht/complex.hpp"
#include "xpht/persistence.hpp"
#include "xpht/wasserstein.hpp"

namespace xpht {

/// Diagram pair per direction, index i <-> v_{i+1}.
std::vector<DiagramPair> compute_xpht(const ShapeComplex& complex, const DirectionSet& directions,
                                      int workers = 1);

class DistanceMatrix {
public:
    explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, 0.0) {}

    int size() const { return n_; }
    double at(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }
    double& at(int i, int j) { return d_[static_cast<std::size_t>(i) * n_ + j]; }

private:
    int n_;
    std::vector<double> d_;
};

/// delta_ij = W1(XPHT(M, v_i), XPHT(M, v_j)); symmetric, zero diagonal.
DistanceMatrix distance_matrix(const std::vector<DiagramPair>& xpht, int workers = 1);

enum class ScoreFlavor { Rotation, Reflection };

struct ScoreTable {
    ScoreFlavor flavor = ScoreFlavor::Rotation;
    std::vector<double> angles_degrees;
    std::vector<double> scores;

    int size() const { return static_cast<int>(scores.size()); }
};

/// Slot s scores the rotation by 360 s / N degrees:
/// (1/N) sum_j D[j][(j + s) mod N]. Slot 0 is the identity and scores 0.
ScoreTable rotation_scores(const DistanceMatrix& d);

/// Slot s scores the reflection plane at 180 (s + 1) / N degrees:
/// (1/N) sum_j D[j][(s - j - 1) mod N], the pairing v_j -> v_{(s+1-j) mod N}
/// induced by reflecting direction angles about the plane.
ScoreTable reflection_scores(const DistanceMatrix& d);

struct Transform {
    enum class Kind { Rotation, Reflection };
    Kind kind = Kind::Rotation;
    double angle_degrees = 0.0;

    static Transform rotation(double angle) { return {Kind::Rotation, angle}; }
    static Transform reflection(double angle) { return {Kind::Reflection, angle}; }
};

/// Direct evaluation of (1/N) sum_i W1(XPHT(M, v_i), XPHT(M, T v_i)).
/// T must map the direction set onto itself (rotation by a multiple of
/// 360/N degrees, or a reflection plane at a multiple of 180/N); otherwise
/// throws std::invalid_argument. Matches the score-table entries.
double asymmetry_score(const std::vector<DiagramPair>& xpht, Transform t);

/// Entries strictly below both circular neighbors; a plateau reports its
/// first slot. Returns (angle, score) pairs.
std::vector<std::pair<double, double>> find_local_minima(const ScoreTable& table);

/// Discretized d^XPHT: mean over directions of the tuple W1 distance.
/// When center_and_normalize is set each shape is centered and rescaled to
/// the unit disc independently first.
double shape_distance(const ShapeComplex& m, const ShapeComplex& n,
                      const DirectionSet& directions, bool center_and_normalize = true,
                      int workers = 1);

struct SymmetryReport {
    int directions = 0;
    double threshold = 0.0;
    bool normalized = true;
    Vec2 center;
    double scale = 0.0;  // r_max used for the unit-disc rescale
    int components = 0;
    int holes = 0;
    ScoreTable rotation;
    ScoreTable reflection;
    std::vector<std::pair<double, double>> detected_rotations;     // (angle, score)
    std::vector<std::pair<double, double>> detected_reflections;
    std::vector<std::pair<double, double>> rotation_minima;
    std::vector<std::pair<double, double>> reflection_minima;
};

struct AnalyzeOptions {
    int directions = 120;
    double threshold = 0.06;
    bool normalize = true;
    int workers = 0;
};

/// Full pipeline on a built complex: center, normalize, XPHT, distance
/// matrix, score tables, detected and approximate symmetries.
SymmetryReport analyze_shape(const ShapeComplex& complex, const AnalyzeOptions& options);

}  // namespace xpht
