#include "curvecount/graph_io.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace curvecount {

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t k = 0; k < std::min(byte, text.size()); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

void require_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* k) { return key == k; }) == allowed.end()) {
      throw ParseError(where + ": unknown key '" + key + "'");
    }
  }
}

std::string require_string(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    throw ParseError(where + "/" + key + ": expected a string");
  }
  return it->get<std::string>();
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

ParseError::ParseError(const std::string& message) : std::runtime_error(message) {}

Multigraph parse_graph_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& err) {
    auto [line, column] = line_column(text, err.byte == 0 ? 0 : err.byte - 1);
    throw ParseError(err.what(), line, column);
  }
  require_keys(doc, "", {"vertices", "edges"});
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) throw ParseError("/vertices: expected an array");
  if (!doc.contains("edges") || !doc["edges"].is_array()) throw ParseError("/edges: expected an array");

  std::vector<Vertex> vertices;
  for (std::size_t k = 0; k < doc["vertices"].size(); ++k) {
    const auto& v = doc["vertices"][k];
    const std::string where = "/vertices/" + std::to_string(k);
    require_keys(v, where, {"id", "genus"});
    Vertex out{require_string(v, "id", where), 0};
    if (auto g = v.find("genus"); g != v.end()) {
      if (!g->is_number_integer() || g->get<long long>() < 0) {
        throw ParseError(where + "/genus: expected a nonnegative integer");
      }
      out.genus = static_cast<int>(g->get<long long>());
    }
    vertices.push_back(std::move(out));
  }

  std::vector<Edge> edges;
  for (std::size_t k = 0; k < doc["edges"].size(); ++k) {
    const auto& e = doc["edges"][k];
    const std::string where = "/edges/" + std::to_string(k);
    require_keys(e, where, {"id", "ends"});
    auto ends = e.find("ends");
    if (ends == e.end() || !ends->is_array() || ends->size() != 2 || !(*ends)[0].is_string() ||
        !(*ends)[1].is_string()) {
      throw ParseError(where + "/ends: expected two vertex ids");
    }
    edges.push_back(Edge{require_string(e, "id", where), {(*ends)[0].get<std::string>(), (*ends)[1].get<std::string>()}});
  }

  try {
    return Multigraph(std::move(vertices), std::move(edges));
  } catch (const GraphError& err) {
    throw ParseError(err.what());
  }
}

std::string to_graph_json(const Multigraph& g) {
  nlohmann::ordered_json doc;
  doc["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : g.vertices()) {
    nlohmann::ordered_json item;
    item["id"] = v.id;
    item["genus"] = v.genus;
    doc["vertices"].push_back(std::move(item));
  }
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges()) {
    nlohmann::ordered_json item;
    item["id"] = e.id;
    item["ends"] = {e.ends.first, e.ends.second};
    doc["edges"].push_back(std::move(item));
  }
  return doc.dump();
}

}  // namespace curvecount
