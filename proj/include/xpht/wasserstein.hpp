#pragma once

#include <vector>

#include "xpht/persistence.hpp"

namespace xpht {

/// |a - b| when the kinds match, infinity otherwise.
double d_theta(ThetaPoint a, ThetaPoint b);

/// Sum of the endpoint distances; finite iff the intervals share a kind.
double d_interval(const XPHInterval& a, const XPHInterval& b);

/// Distance from an interval to the nearest same-kind ephemeral interval.
/// The infimum of |b - s| + |d - s| over s collapses to |b - d| for all three
/// families.
double ephemeral_cost(const XPHInterval& interval);

struct TransportPlanCost {
    double matched = 0.0;      // cost of matched interval pairs
    double unmatched_x = 0.0;  // X intervals routed to ephemerals
    double unmatched_y = 0.0;  // Y intervals routed to ephemerals
    double total = 0.0;
};

/// Optimal transportation plan cost between two diagrams of the same degree.
/// Solved per interval kind as an exact assignment problem; cross-kind
/// matches cost infinity so the decomposition loses nothing.
TransportPlanCost w1_plan(const XPHDiagram& x, const XPHDiagram& y);

double w1(const XPHDiagram& x, const XPHDiagram& y);

/// W1 on degree 0 plus W1 on degree 1.
double w1_tuple(const DiagramPair& a, const DiagramPair& b);

/// Exact minimum-cost perfect matching on a dense n x n cost matrix
/// (row-major, finite entries). O(n^3). Exposed for tests.
double solve_assignment(const std::vector<double>& cost, int n,
                        std::vector<int>* row_to_col = nullptr);

}  // namespace xpht
