#include "curvecount/report.hpp"

#include <functional>
#include <sstream>

#include <json.hpp>

#include "curvecount/graph_io.hpp"
#include "curvecount/invariants.hpp"

namespace curvecount {

namespace {

using ojson = nlohmann::ordered_json;

ojson integer(const BigInt& x) {
  if (x.fits_slong_p()) return ojson(x.get_si());
  return ojson(x.get_str());
}

ojson integers(const std::vector<BigInt>& xs) {
  ojson out = ojson::array();
  for (const auto& x : xs) out.push_back(integer(x));
  return out;
}

std::string render_json_value(const ojson& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "n/a";
  if (v.is_array()) {
    std::string out = "[";
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k > 0) out += ", ";
      out += render_json_value(v[k]);
    }
    return out + "]";
  }
  return v.dump();
}

}  // namespace

std::string invariants_cache_key(const Multigraph& g) { return "invariants/1\n" + to_graph_json(g); }

std::string invariants_json(const Multigraph& g) {
  ojson doc;
  ojson unavailable = ojson::object();
  // Evaluates one field, turning hypothesis failures into null plus a reason.
  auto field = [&](const char* key, const std::function<ojson()>& compute) {
    try {
      doc[key] = compute();
    } catch (const GraphError& e) {
      doc[key] = nullptr;
      unavailable[key] = e.what();
    }
  };

  doc["graph"] = ojson::parse(to_graph_json(g));
  const NumericInvariants inv = numeric_invariants(g);
  doc["numeric"] = {{"gamma", inv.components},          {"delta", inv.cogenus},
                    {"g", inv.arithmetic_genus},         {"g_geom", inv.geometric_genus},
                    {"g_ab", inv.abelian_rank},          {"delta_a", inv.affine_rank},
                    {"h0", component_count(g)},          {"h1", first_betti(g)}};
  field("n", [&] {
    ojson out = ojson::array();
    for (auto x : n_vector(g)) out.push_back(x);
    return out;
  });
  field("c", [&] { return integer(spanning_forest_count(g, ForestCountMethod::MatrixTree)); });
  field("jacobian_class", [&] {
    const JacobianClass j = jacobian_class(g);
    return ojson{{"strata", j.strata.render()}, {"closed", j.closed.render()}};
  });
  field("jacobian_weight_poly", [&] { return ojson(jacobian_weight_poly(g).render()); });
  field("ic_weight_poly", [&] { return ojson(ic_weight_poly(g).render()); });
  field("hilbert_series", [&] { return ojson(hilbert_series(g).render()); });
  field("perverse_series", [&] { return ojson(perverse_series(g).render()); });
  field("severi", [&] {
    const SeveriVectors s = severi_vectors(g);
    return ojson{{"nbar", integers(s.nbar)}, {"n", integers(s.n)}};
  });
  doc["unavailable"] = unavailable;
  return doc.dump(2) + "\n";
}

std::string invariants_text(const std::string& json_report) {
  const ojson doc = ojson::parse(json_report);
  std::ostringstream out;
  out << "vertices: " << doc["graph"]["vertices"].size() << "\n";
  out << "edges: " << doc["graph"]["edges"].size() << "\n";
  for (const auto& [key, value] : doc["numeric"].items()) out << key << ": " << value.dump() << "\n";
  out << "n: " << render_json_value(doc["n"]) << "\n";
  out << "c: " << render_json_value(doc["c"]) << "\n";
  if (doc["jacobian_class"].is_null()) {
    out << "jacobian class: n/a\n";
  } else {
    out << "jacobian class (strata): " << render_json_value(doc["jacobian_class"]["strata"]) << "\n";
    out << "jacobian class (closed): " << render_json_value(doc["jacobian_class"]["closed"]) << "\n";
  }
  out << "jacobian weight polynomial: " << render_json_value(doc["jacobian_weight_poly"]) << "\n";
  out << "ic weight polynomial: " << render_json_value(doc["ic_weight_poly"]) << "\n";
  out << "hilbert series: " << render_json_value(doc["hilbert_series"]) << "\n";
  out << "perverse series: " << render_json_value(doc["perverse_series"]) << "\n";
  if (doc["severi"].is_null()) {
    out << "severi: n/a\n";
  } else {
    out << "severi nbar: " << render_json_value(doc["severi"]["nbar"]) << "\n";
    out << "severi n: " << render_json_value(doc["severi"]["n"]) << "\n";
  }
  for (const auto& [key, reason] : doc["unavailable"].items()) {
    out << "unavailable " << key << ": " << reason.get<std::string>() << "\n";
  }
  return out.str();
}

}  // namespace curvecount
