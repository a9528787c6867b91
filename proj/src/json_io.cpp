#include "pcc/json_io.hpp"

#include <algorithm>
#include <fstream>

namespace pcc {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::BadFormat, what); }

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

Color dense_color(const ColoredCompleteGraph& g, int label) {
  const auto& labels = g.labels();
  auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it == labels.end() || *it != label) bad("color " + std::to_string(label) + " is not in the palette");
  return static_cast<Color>(it - labels.begin());
}

}  // namespace

Json instance_to_json(const ColoredCompleteGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.color});
  return Json{{"n", g.order()}, {"edges", edges}};
}

ColoredCompleteGraph instance_from_json(const Json& j) {
  if (!j.is_object()) bad("instance must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key != "n" && key != "edges") bad("unexpected key \"" + key + "\"");
  }
  if (!j.contains("n") || !j.contains("edges")) bad("instance needs \"n\" and \"edges\"");
  const int n = as_int(j.at("n"), "n");
  if (n < 1) bad("n must be positive");
  const auto& edges = j.at("edges");
  if (!edges.is_array()) bad("edges must be an array");
  const auto expected = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  if (edges.size() != expected) {
    bad("expected " + std::to_string(expected) + " edges, got " + std::to_string(edges.size()));
  }
  std::vector<EdgeSpec> specs;
  specs.reserve(edges.size());
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 3) bad("each edge must be [u, v, color]");
    specs.push_back({as_int(e[0], "u"), as_int(e[1], "v"), as_int(e[2], "color")});
  }
  return ColoredCompleteGraph::build(n, specs);
}

Json certificate_to_json(const ColoredCompleteGraph& g, const DegeneracyCertificate& cert) {
  Json f = Json::object();
  for (auto [v, c] : cert.assign) f[std::to_string(v)] = g.label(c);
  return Json{{"S", cert.set}, {"f", f}};
}

DegeneracyCertificate certificate_from_json(const ColoredCompleteGraph& g, const Json& j) {
  if (!j.is_object() || !j.contains("S") || !j.contains("f")) bad("certificate needs \"S\" and \"f\"");
  DegeneracyCertificate cert;
  for (const auto& v : j.at("S")) cert.set.push_back(as_int(v, "S entry"));
  std::sort(cert.set.begin(), cert.set.end());
  for (const auto& [key, value] : j.at("f").items()) {
    int v = 0;
    try {
      v = std::stoi(key);
    } catch (const std::exception&) {
      bad("f key \"" + key + "\" is not a vertex");
    }
    cert.assign.emplace(v, dense_color(g, as_int(value, "f value")));
  }
  return cert;
}

Json cycle_to_json(const PcCycle& c) { return Json{{"vertices", c.vertices()}, {"closed", true}}; }

Json path_to_json(const PcPath& p) { return Json{{"vertices", p}, {"closed", false}}; }

Json digraph_to_json(const MultipartiteTournament& t) {
  Json arcs = Json::array();
  for (auto [u, v] : t.arcs()) arcs.push_back({u, v});
  return Json{{"parts", t.parts()}, {"arcs", arcs}};
}

MultipartiteTournament digraph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("parts") || !j.contains("arcs")) bad("digraph needs \"parts\" and \"arcs\"");
  std::vector<std::vector<Vertex>> parts;
  for (const auto& p : j.at("parts")) {
    std::vector<Vertex> part;
    for (const auto& v : p) part.push_back(as_int(v, "part entry"));
    parts.push_back(std::move(part));
  }
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (const auto& a : j.at("arcs")) {
    if (!a.is_array() || a.size() != 2) bad("each arc must be [u, v]");
    arcs.push_back({as_int(a[0], "arc tail"), as_int(a[1], "arc head")});
  }
  return MultipartiteTournament(std::move(parts), arcs);
}

Json result_to_json(const ColoredCompleteGraph& g, const TrichotomyResult& r) {
  Json certs = Json::object();
  switch (r.tag) {
    case TrichotomyTag::Pancyclic: {
      Json cycles = Json::array();
      for (const auto& [key, cycle] : r.cycles) {
        cycles.push_back(Json{{"vertex", key.first}, {"length", key.second}, {"vertices", cycle.vertices()}});
      }
      certs["route"] = r.route == TrichotomyResult::Route::DegenerateReduction ? "degenerate-reduction" : "growth";
      certs["cycles"] = cycles;
      break;
    }
    case TrichotomyTag::ProperDegenerate:
      certs["degenerate_set"] = certificate_to_json(g, *r.degenerate_set);
      break;
    case TrichotomyTag::ExceptionK5: {
      certs["bijection"] = *r.bijection;
      Json colors = Json::object();
      // Label of g that plays canonical color 1 (the pentagon 0-1-2-3-4).
      const auto& phi = *r.bijection;
      Vertex a = 0, b = 0;
      for (Vertex v = 0; v < 5; ++v) {
        if (phi[static_cast<std::size_t>(v)] == 0) a = v;
        if (phi[static_cast<std::size_t>(v)] == 1) b = v;
      }
      const Color first = g.color(a, b);
      colors["1"] = g.label(first);
      colors["2"] = g.label(1 - first);
      certs["colors"] = colors;
      break;
    }
  }
  return Json{{"tag", std::string(1, tag_letter(r.tag))}, {"certificates", certs}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    bad(path + ": " + e.what());
  }
}

}  // namespace pcc
