#include "syzcx/serialize.hpp"

#include <climits>
#include <set>

#include "syzcx/error.hpp"
#include "syzcx/parser.hpp"

namespace syzcx {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json integer_json(const BigInt& v) {
  if (v.fits_slong_p()) return static_cast<long>(v.get_si());
  return v.get_str();
}

namespace {

Json key_fields(const CyclicKey& key, const Quiver& q) {
  Json killers = Json::array();
  for (const auto& w : key.killers) killers.push_back(path_string(q, w));
  return Json{{"vertex", q.vertex(key.vertex)}, {"killers", killers}};
}

std::string key_label(const CyclicKey& key, const Quiver& q) {
  std::string s = q.vertex(key.vertex) + "|{";
  for (std::size_t i = 0; i < key.killers.size(); ++i) {
    if (i) s += ",";
    s += path_string(q, key.killers[i]);
  }
  return s + "}";
}

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::parse, "bad_quiver_json", what); }

CyclicKey key_from_json(const Json& j, const Quiver& q) {
  if (!j.is_object() || !j.contains("vertex") || !j["vertex"].is_string()) bad("every label needs a \"vertex\" string");
  auto v = q.find_vertex(j["vertex"].get<std::string>());
  if (!v) throw Error(ErrorKind::parse, "unknown_reference", "unknown vertex '" + j["vertex"].get<std::string>() + "'");
  CyclicKey key{*v, {}};
  if (j.contains("killers")) {
    if (!j["killers"].is_array()) bad("\"killers\" must be an array");
    for (const auto& k : j["killers"]) {
      if (!k.is_string()) bad("killers must be path strings");
      key.killers.push_back(parse_path_literal(q, k.get<std::string>()));
    }
  }
  std::sort(key.killers.begin(), key.killers.end());
  return key;
}

}  // namespace

Json coefficients_json(const IntPolynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(integer_json(c));
  if (p.is_zero()) a.push_back(0);
  return a;
}

Json to_json(const AlgebraicReal& r) {
  return Json{{"poly", coefficients_json(r.poly())},
              {"interval", Json::array({rational_string(r.lo()), rational_string(r.hi())})},
              {"approx", r.approx()}};
}

Json to_json(const ComplexityClass& c) {
  if (c.is_zero()) {
    Json pd = c.projective_dimension() ? Json(*c.projective_dimension()) : Json(nullptr);
    return Json{{"kind", "zero"}, {"pd", pd}};
  }
  return Json{{"kind", "polyexp"}, {"base", to_json(c.base())}, {"degree", c.degree()}};
}

Json class_result_json(const ComplexityClass& c, bool lower_bound) {
  return Json{{"class", to_json(c)}, {"curvature", c.is_zero() ? Json(0) : to_json(c.base())}, {"lower_bound", lower_bound}};
}

Json to_json(const CurvatureVerdict& v) {
  return Json{{"status", to_string(v.status)},
              {"b", v.b ? to_json(*v.b) : Json(nullptr)},
              {"irreducibility", to_string(v.irreducibility)},
              {"reason", v.reason}};
}

std::string quiver_vertex_id(int v) { return "q" + std::to_string(v); }

Json to_json(const SyzygyQuiver& q, const Quiver& aq) {
  Json vertices = Json::array();
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    const auto& terms = q.labels[i].terms();
    Json v;
    if (terms.size() == 1 && terms.begin()->second == 1) {
      v = key_fields(terms.begin()->first, aq);
    } else {
      Json summands = Json::array();
      for (const auto& [key, mult] : terms) {
        Json s = key_fields(key, aq);
        s["mult"] = mult;
        summands.push_back(s);
      }
      v["summands"] = summands;
    }
    v["id"] = quiver_vertex_id(static_cast<int>(i));
    vertices.push_back(v);
  }
  Json arrows = Json::array();
  for (auto [f, t] : q.arrows) arrows.push_back(Json{{"from", quiver_vertex_id(f)}, {"to", quiver_vertex_id(t)}});
  return Json{{"vertices", vertices}, {"arrows", arrows}, {"partial", q.partial}};
}

Json to_json(const Condensation& c) {
  Json comps = Json::array();
  for (const auto& comp : c.components) {
    Json members = Json::array();
    for (int v : comp.members) members.push_back(quiver_vertex_id(v));
    comps.push_back(Json{{"members", members}, {"rho", to_json(comp.rho)}});
  }
  return comps;
}

std::string to_dot(const SyzygyQuiver& q, const Quiver& aq) {
  if (q.vertex_count() == 0) return "digraph G {}\n";
  std::string out = "digraph G {\n";
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    std::string label;
    for (const auto& [key, mult] : q.labels[i].terms()) {
      if (!label.empty()) label += " + ";
      if (mult != 1) label += std::to_string(mult) + "*";
      label += key_label(key, aq);
    }
    out += "  " + quiver_vertex_id(static_cast<int>(i)) + " [label=\"" + label + "\"];\n";
  }
  for (auto [f, t] : q.arrows) out += "  " + quiver_vertex_id(f) + " -> " + quiver_vertex_id(t) + ";\n";
  return out + "}\n";
}

SyzygyQuiver quiver_from_json(const Json& j, const Quiver& aq, std::map<std::string, int>* ids_out) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) bad("expected an object with \"vertices\"");
  SyzygyQuiver q;
  std::map<std::string, int> ids;
  for (const auto& v : j["vertices"]) {
    if (!v.is_object() || !v.contains("id") || !v["id"].is_string()) bad("every vertex needs an \"id\" string");
    std::string id = v["id"].get<std::string>();
    if (ids.count(id)) throw Error(ErrorKind::parse, "duplicate_identifier", "quiver vertex '" + id + "' appears twice");
    ModuleExpr label;
    if (v.contains("summands")) {
      if (!v["summands"].is_array()) bad("\"summands\" must be an array");
      for (const auto& s : v["summands"]) {
        std::int64_t mult = 1;
        if (s.contains("mult")) {
          if (!s["mult"].is_number_integer() || s["mult"].get<std::int64_t>() < 1) bad("\"mult\" must be a positive integer");
          mult = s["mult"].get<std::int64_t>();
        }
        label.add(key_from_json(s, aq), mult);
      }
    } else {
      label.add(key_from_json(v, aq));
    }
    ids[id] = static_cast<int>(q.labels.size());
    q.labels.push_back(std::move(label));
  }
  if (j.contains("arrows")) {
    if (!j["arrows"].is_array()) bad("\"arrows\" must be an array");
    for (const auto& a : j["arrows"]) {
      if (!a.is_object() || !a.contains("from") || !a.contains("to") || !a["from"].is_string() || !a["to"].is_string())
        bad("every arrow needs \"from\" and \"to\" strings");
      auto f = ids.find(a["from"].get<std::string>());
      auto t = ids.find(a["to"].get<std::string>());
      if (f == ids.end() || t == ids.end()) throw Error(ErrorKind::parse, "unknown_reference", "arrow endpoint is not a quiver vertex");
      q.arrows.emplace_back(f->second, t->second);
    }
  }
  if (j.contains("partial")) {
    if (!j["partial"].is_boolean()) bad("\"partial\" must be a boolean");
    q.partial = j["partial"].get<bool>();
  }
  if (ids_out) *ids_out = ids;
  return q;
}

}  // namespace syzcx
