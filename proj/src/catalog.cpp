#include "curvecount/catalog.hpp"

#include <charconv>

namespace curvecount {

Multigraph make_graph(const std::vector<int>& genera, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Vertex> vertices;
  for (std::size_t k = 0; k < genera.size(); ++k) vertices.push_back({"v" + std::to_string(k + 1), genera[k]});
  std::vector<Edge> out;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    out.push_back({"e" + std::to_string(k + 1),
                   {"v" + std::to_string(edges[k].first + 1), "v" + std::to_string(edges[k].second + 1)}});
  }
  return Multigraph(std::move(vertices), std::move(out));
}

namespace {

std::optional<int> family_size(std::string_view name, std::string_view prefix) {
  if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
  const std::string_view digits = name.substr(prefix.size());
  int k = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || k < 1 || k > 64) return std::nullopt;
  return k;
}

}  // namespace

std::optional<Multigraph> catalog_graph(std::string_view name) {
  if (name == "node") return make_graph({0}, {{0, 0}});
  if (name == "banana") return make_graph({0, 0}, {{0, 1}, {0, 1}});
  if (name == "triangle") return make_graph({0, 0, 0}, {{0, 1}, {1, 2}, {0, 2}});
  if (name == "theta") return make_graph({0, 0}, {{0, 1}, {0, 1}, {0, 1}});
  if (name == "pair-of-lines") return make_graph({0, 0}, {{0, 1}});
  if (name == "banana-genus") return make_graph({1, 1}, {{0, 1}, {0, 1}});
  if (name == "triangle-genus") return make_graph({2, 0, 0}, {{0, 1}, {1, 2}, {0, 2}});
  if (name == "banana-plus-point") return make_graph({0, 0, 0}, {{0, 1}, {0, 1}});
  if (name == "empty") return Multigraph();
  if (auto k = family_size(name, "cycle-")) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < *k; ++i) edges.emplace_back(i, (i + 1) % *k);
    return make_graph(std::vector<int>(static_cast<std::size_t>(*k), 0), edges);
  }
  if (auto k = family_size(name, "chain-")) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < *k; ++i) edges.emplace_back(i, i + 1);
    return make_graph(std::vector<int>(static_cast<std::size_t>(*k), 0), edges);
  }
  return std::nullopt;
}

std::vector<std::string> catalog_names() {
  return {"banana",  "banana-genus", "banana-plus-point", "chain-1",  "chain-2", "chain-3",
          "cycle-3", "cycle-4",      "cycle-5",           "empty",    "node",    "pair-of-lines",
          "theta",   "triangle",     "triangle-genus"};
}

}  // namespace curvecount
