#pragma once

#include <string>

#include <json.hpp>

#include "xpht/persistence.hpp"
#include "xpht/symmetry.hpp"

namespace xpht {

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double value);

/// One record per interval: degree, kind, birth value, death value. Values
/// are serialized as decimal strings that round-trip exactly.
nlohmann::json diagram_to_json(const XPHDiagram& diagram);
XPHDiagram diagram_from_json(const nlohmann::json& array, int degree);

/// All diagram pairs of a run, one object per direction.
nlohmann::json diagrams_to_json(const std::vector<DiagramPair>& xpht,
                                const DirectionSet& directions);

nlohmann::json report_to_json(const SymmetryReport& report, const std::string& source,
                              int image_width, int image_height);

/// CSV with header angle_degrees,score.
std::string score_table_csv(const ScoreTable& table);

/// Polar plot with one rotation and one reflection series (reflection planes
/// drawn at both theta and theta + 180) and a dashed circle at the threshold.
std::string polar_plot_svg(const SymmetryReport& report);

}  // namespace xpht
