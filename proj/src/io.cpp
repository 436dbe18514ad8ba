// Copyright 2026 The speclab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "speclab/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "speclab/errors.hpp"

namespace speclab {

namespace {

std::int64_t schemaInt(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) throw SchemaError(where + " must be an integer");
  return v.get<std::int64_t>();
}

}  // namespace

Graph graphFromJson(const Json& doc) {
  if (!doc.is_object()) throw SchemaError("graph document must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "name" && key != "n" && key != "edges" && key != "loops")
      throw SchemaError("unknown key \"" + key + "\"");
  }
  if (!doc.contains("n")) throw SchemaError("missing \"n\"");
  const std::int64_t n = schemaInt(doc["n"], "\"n\"");
  if (n < 1 || n > Graph::kMaxVertices)
    throw SchemaError("\"n\" must lie in 1.." + std::to_string(Graph::kMaxVertices));
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw SchemaError("\"name\" must be a string");
    name = doc["name"].get<std::string>();
  }
  auto vertex = [n](const Json& v, const std::string& where) {
    const std::int64_t x = schemaInt(v, where);
    if (x < 1 || x > n) throw SchemaError(where + " = " + std::to_string(x) + " is outside 1..n");
    return static_cast<int>(x - 1);
  };
  auto weight = [](const Json& v, const std::string& where) {
    const std::int64_t w = schemaInt(v, where);
    if (w <= 0) throw SchemaError(where + " must be a positive integer");
    return w;
  };
  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw SchemaError("\"edges\" must be an array");
    std::size_t i = 0;
    for (const Json& e : doc["edges"]) {
      const std::string where = "edges[" + std::to_string(i++) + "]";
      if (!e.is_array() || e.size() < 2 || e.size() > 3) throw SchemaError(where + " must be [u, v] or [u, v, w]");
      edges.push_back({vertex(e[0], where + ".u"), vertex(e[1], where + ".v"), e.size() == 3 ? weight(e[2], where + ".w") : 1});
    }
  }
  std::vector<Loop> loops;
  if (doc.contains("loops")) {
    if (!doc["loops"].is_array()) throw SchemaError("\"loops\" must be an array");
    std::size_t i = 0;
    for (const Json& l : doc["loops"]) {
      const std::string where = "loops[" + std::to_string(i++) + "]";
      if (!l.is_array() || l.size() < 1 || l.size() > 2) throw SchemaError(where + " must be [v] or [v, w]");
      loops.push_back({vertex(l[0], where + ".v"), l.size() == 2 ? weight(l[1], where + ".w") : 1});
    }
  }
  try {
    return Graph(static_cast<int>(n), std::move(edges), std::move(loops), std::move(name));
  } catch (const DomainError& e) {
    throw SchemaError(e.what());
  }
}

Graph readGraphFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open graph file " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
  return graphFromJson(doc);
}

Json graphToJson(const Graph& g) {
  Json edges = Json::array(), loops = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u + 1, e.v + 1, e.w});
  for (const Loop& l : g.loops()) loops.push_back({l.v + 1, l.w});
  return Json{{"name", g.name()}, {"n", g.order()}, {"edges", edges}, {"loops", loops}};
}

std::string graphToDot(const Graph& g) {
  std::ostringstream os;
  os << "graph \"" << g.name() << "\" {\n";
  for (int v = 0; v < g.order(); ++v) os << "  " << v + 1 << ";\n";
  for (const Edge& e : g.edges()) {
    os << "  " << e.u + 1 << " -- " << e.v + 1;
    if (e.w != 1) os << " [label=" << e.w << ", weight=" << e.w << "]";
    os << ";\n";
  }
  for (const Loop& l : g.loops()) {
    os << "  " << l.v + 1 << " -- " << l.v + 1;
    if (l.w != 1) os << " [label=" << l.w << "]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string formatDouble(double x) {
  if (x == 0) x = 0;  // drop the sign of -0
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 15);
  return std::string(buf, res.ptr);
}

Json jsonNumber(double x) {
  if (!std::isfinite(x)) return nullptr;
  const std::string s = formatDouble(x);
  double y = 0;
  std::from_chars(s.data(), s.data() + s.size(), y);
  return y;
}

Json rationalJson(const Rational& r) {
  Json out;
  if (auto n = r.numeratorInt()) out["num"] = *n; else out["num"] = r.numerator();
  if (auto d = r.denominatorInt()) out["den"] = *d; else out["den"] = r.denominator();
  out["float"] = jsonNumber(r.toDouble());
  return out;
}

Json vertexList(const VertexSubset& s) {
  Json a = Json::array();
  for (int v : s.vertices()) a.push_back(v + 1);
  return a;
}

namespace {

Json numbers(const std::vector<double>& xs) {
  Json a = Json::array();
  for (double x : xs) a.push_back(jsonNumber(x));
  return a;
}

}  // namespace

Json spectrumJson(const Spectrum& s, bool withVectors) {
  Json out{{"kind", kindName(s.kind)},
           {"eigenvalues", numbers(s.eigenvalues)},
           {"residual", jsonNumber(s.residual)},
           {"orthogonality", jsonNumber(s.orthogonality)}};
  if (withVectors) {
    Json v = Json::array();
    for (const auto& u : s.eigenvectors) v.push_back(numbers(u));
    out["vectors"] = v;
  }
  return out;
}

Json closedFormJson(const ClosedFormSpectrum& s, MatrixKind kind, bool withVectors) {
  Json out{{"kind", kindName(kind)}, {"closed_form", true}, {"eigenvalues", numbers(s.eigenvalues)}};
  if (withVectors && s.eigenvectors) {
    Json v = Json::array();
    for (const auto& u : *s.eigenvectors) v.push_back(numbers(u));
    out["vectors"] = v;
  }
  return out;
}

Json cutReportJson(const CutReport& r) {
  Json out = rationalJson(r.value);
  out["method"] = methodName(r.method);
  out["branch"] = r.branch;
  out["cut_weight"] = r.witness ? Json(r.cutWeight) : Json(nullptr);
  out["witness"] = r.witness ? vertexList(*r.witness) : Json(nullptr);
  if (r.family) out["family"] = r.family->label();
  if (r.restriction) out["restriction"] = *r.restriction;
  return out;
}

Json bisectJson(const BisectReport& r) {
  Json out{{"lambda2", jsonNumber(r.lambda2)},
           {"simple", r.simple},
           {"gap", jsonNumber(r.gap)},
           {"parity", parityName(r.parity)},
           {"lcut", rationalJson(r.lcut)},
           {"positive_side", vertexList(r.positiveSide)},
           {"zero_count", r.zeroCount},
           {"zero_tol", jsonNumber(kZeroTol)},
           {"fiedler", numbers(r.fiedler)}};
  out["alt_orientation_lcut"] = r.altLcut ? rationalJson(*r.altLcut) : Json(nullptr);
  return out;
}

Json counterexampleJson(const CounterexampleVerdict& v) {
  return Json{{"k", v.k},
              {"graph", FamilySpec::roach(2 * v.k, v.k).label()},
              {"mcut", cutReportJson(v.mcut)},
              {"lcut", bisectJson(v.bisect)},
              {"top_row_ncut", rationalJson(v.topRowNcut)},
              {"lcut_is_top_row", v.lcutIsTopRow},
              {"parity", parityName(v.bisect.parity)},
              {"strictly_less", v.strictlyLess},
              {"holds", v.holds}};
}

std::string sweepCsv(const std::vector<SweepRow>& rows) {
  std::string out = "n,k,branch,value_num,value_den,value_float\n";
  for (const SweepRow& r : rows)
    out += std::to_string(r.n) + "," + std::to_string(r.k) + "," + r.branch + "," + r.value.numerator() + "," +
           r.value.denominator() + "," + formatDouble(r.value.toDouble()) + "\n";
  return out;
}

std::string sweepGnuplot(const std::vector<SweepRow>& rows) {
  std::map<std::string, int> ids;
  for (const SweepRow& r : rows) ids.emplace(r.branch, 0);
  int next = 0;
  for (auto& [label, id] : ids) id = next++;
  std::string out = "# n k branch_id value\n";
  for (const auto& [label, id] : ids) out += "# branch " + std::to_string(id) + " = " + label + "\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const SweepRow& r = rows[i];
    if (i > 0 && rows[i - 1].n != r.n) out += "\n";  // gnuplot scan separator
    out += std::to_string(r.n) + " " + std::to_string(r.k) + " " + std::to_string(ids[r.branch]) + " " +
           formatDouble(r.value.toDouble()) + "\n";
  }
  return out;
}

}  // namespace speclab
