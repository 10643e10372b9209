#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "curvecount/graph.hpp"

namespace curvecount {

/// Built-in dual graphs. Vertices are v1..vn, edges e1..em.
///   node              one vertex with a loop (nodal cubic)
///   banana            two vertices joined by two edges
///   triangle          3-cycle
///   theta             two vertices joined by three edges
///   pair-of-lines     two vertices joined by one edge
///   cycle-K           K-cycle (cycle-1 is node, cycle-2 is banana)
///   chain-K           path on K vertices
///   banana-genus      banana with both vertices of genus 1
///   triangle-genus    triangle with v1 of genus 2
///   banana-plus-point banana plus an isolated vertex
///   empty             no vertices
std::optional<Multigraph> catalog_graph(std::string_view name);

/// The fixed names plus cycle-3..5 and chain-1..3 as samples of the families.
std::vector<std::string> catalog_names();

Multigraph make_graph(const std::vector<int>& genera, const std::vector<std::pair<int, int>>& edges);

}  // namespace curvecount
