// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "netaural/graph.hpp"

namespace netaural {

enum class Measure { Degree, Closeness, Betweenness, Eigenvector, Predicted };

std::string_view measure_name(Measure m);
/// Short column label used in correlation tables: Deg, CC, BC, EC.
std::string_view measure_short_name(Measure m);
/// Accepts "degree", "closeness", "betweenness", "eigenvector".
std::optional<Measure> parse_measure(std::string_view name);
/// The four ground-truth measures, in table order.
const std::vector<Measure>& target_measures();

struct CentralityVector {
    Measure measure = Measure::Predicted;
    std::vector<double> values;
};

/// Power iteration failed to converge, or the graph has no edges.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raw degree.
CentralityVector degree_centrality(const Graph& g);

/// Component-normalized closeness: ((r-1)/sum_d) * ((r-1)/(n-1)) with r the
/// size of v's component; 0 for isolated nodes.
CentralityVector closeness_centrality(const Graph& g);

/// Brandes betweenness normalized by (n-1)(n-2)/2 unordered pairs,
/// endpoints excluded. All zeros when n < 3.
CentralityVector betweenness_centrality(const Graph& g);

/// Principal eigenvector of A via power iteration on A + I (the shift keeps
/// bipartite graphs from oscillating), L2-normalized and nonnegative.
/// Converged once successive iterates differ by less than tol in L2.
CentralityVector eigenvector_centrality(const Graph& g, double tol = 1e-10,
                                        std::size_t max_iter = 1000);

/// Betweenness by explicit enumeration of every shortest path between every
/// pair. Test reference only; limited to n <= 12.
CentralityVector naive_betweenness_oracle(const Graph& g);

/// Dispatches to the measure's routine. Measure::Predicted is rejected.
CentralityVector compute_centrality(const Graph& g, Measure m);

/// "node_id,label,measure,value" rows in node-id order. Labels are optional.
std::string centrality_csv(const CentralityVector& c, const std::vector<std::string>& labels = {});

} // namespace netaural
