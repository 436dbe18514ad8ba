// Copyright 2026 The speclab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "speclab/bisect.hpp"
#include "speclab/charpoly.hpp"
#include "speclab/cuts.hpp"
#include "speclab/errors.hpp"
#include "speclab/families.hpp"
#include "speclab/io.hpp"
#include "speclab/spectra.hpp"

namespace speclab::cli {

namespace {

// Command-line usage problems that CLI11 cannot detect by itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Source {
  std::string graphPath;
  std::string family;
  int n = 0, k = 0, m = 0, depth = 0;
  CLI::Option* nOpt = nullptr;
  CLI::Option* kOpt = nullptr;
  CLI::Option* mOpt = nullptr;
  CLI::Option* depthOpt = nullptr;

  void attach(CLI::App* app) {
    auto* g = app->add_option("--graph", graphPath, "Graph JSON file");
    auto* f = app->add_option("--family", family, "Graph family name");
    g->excludes(f);
    nOpt = app->add_option("--n", n, "First family parameter");
    kOpt = app->add_option("--k", k, "Second family parameter (roach, weightedpath)");
    mOpt = app->add_option("--m", m, "Cycle length or lollipop path length");
    depthOpt = app->add_option("--depth", depth, "Tree depth");
  }

  bool isFamily() const { return !family.empty(); }

  FamilySpec spec() const {
    const auto fam = parseFamily(family);
    if (!fam) throw UsageError("unknown family \"" + family + "\"");
    auto need = [&](CLI::Option* o, const char* flag) {
      if (!o->count()) throw UsageError(family + " needs " + flag);
    };
    FamilySpec s;
    s.family = *fam;
    switch (*fam) {
      case Family::Tree:
      case Family::DoubleTree:
        if (depthOpt->count()) s.n = depth;
        else if (nOpt->count()) s.n = n;
        else throw UsageError(family + " needs --depth");
        break;
      case Family::CycleCrossPath:
        need(mOpt, "--m");
        need(nOpt, "--n");
        s.m = m;
        s.n = n;
        break;
      case Family::Roach:
      case Family::WeightedPath:
        need(nOpt, "--n");
        need(kOpt, "--k");
        s.n = n;
        s.k = k;
        break;
      case Family::Lollipop:
        need(nOpt, "--n");
        need(mOpt, "--m");
        s.n = n;
        s.m = m;
        break;
      default:
        need(nOpt, "--n");
        s.n = n;
    }
    s.validateParameters();
    return s;
  }

  Graph graph() const {
    if (!graphPath.empty()) return readGraphFile(graphPath);
    if (isFamily()) return generate(spec());
    throw UsageError("give exactly one of --graph or --family");
  }

  std::optional<std::vector<int>> involution() const {
    if (!isFamily()) return std::nullopt;
    return builtinInvolution(spec());
  }
};

std::pair<int, int> parseRange(const std::string& text, const char* flag) {
  const auto colon = text.find(':');
  try {
    std::size_t used = 0;
    if (colon == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string a = text.substr(0, colon), b = text.substr(colon + 1);
    const int lo = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    const int hi = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError(std::string(flag) + " expects a:b, got \"" + text + "\"");
  }
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump() << '\n'; }

void writeText(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

MatrixKind kindOf(const std::string& name) {
  auto k = parseKind(name);
  if (!k) throw UsageError("unknown matrix kind \"" + name + "\"");
  return *k;
}

Json errorJson(const char* kind, const std::string& message) {
  return Json{{"error", kind}, {"message", message}};
}

// Mcut by enumeration when the graph is small enough, else by formula.
CutReport bestMcut(const Source& src, const Graph& g) {
  if (g.order() <= Graph::kMaxExhaustive) return mcutBrute(g);
  if (src.isFamily()) return mcutFormula(src.spec());
  throw SizeError("graph has " + std::to_string(g.order()) + " vertices; exhaustive Mcut is capped at " +
                  std::to_string(Graph::kMaxExhaustive));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normalized-cut and spectral analysis of small graphs", "speclab"};
  app.require_subcommand(1);
  std::function<void()> action;

  // gen
  Source genSrc;
  std::string genFormat = "json", genOut;
  auto* gen = app.add_subcommand("gen", "Generate a family graph");
  genSrc.attach(gen);
  gen->add_option("--format", genFormat, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  gen->add_option("--out", genOut, "Output path (default stdout)");
  gen->callback([&] {
    action = [&] {
      if (!genSrc.isFamily()) throw UsageError("gen needs --family");
      const Graph g = genSrc.graph();
      writeText(genOut, genFormat == "dot" ? graphToDot(g) : graphToJson(g).dump(2) + "\n", out);
    };
  });

  // spectrum
  Source specSrc;
  std::string specKind = "normalized";
  bool closedForm = false, withVectors = false, dumpCsv = false;
  auto* spec = app.add_subcommand("spectrum", "Eigenvalues of a graph matrix");
  specSrc.attach(spec);
  spec->add_option("--kind", specKind, "adjacency, laplacian, normalized or signless");
  spec->add_flag("--closed-form", closedForm, "Use the closed form (paths and cycles)");
  spec->add_flag("--vectors", withVectors, "Include eigenvectors");
  spec->add_flag("--matrix-csv", dumpCsv, "Print the matrix as CSV instead");
  spec->callback([&] {
    action = [&] {
      const MatrixKind kind = kindOf(specKind);
      if (closedForm) {
        if (!specSrc.isFamily()) throw UsageError("--closed-form needs --family");
        emit(out, closedFormJson(closedFormSpectrum(specSrc.spec(), kind), kind, withVectors));
        return;
      }
      const SymmetricMatrix mat = buildMatrix(specSrc.graph(), kind);
      if (dumpCsv) {
        out << mat.csv();
        return;
      }
      emit(out, spectrumJson(eigSym(mat), withVectors));
    };
  });

  // mcut
  Source mcutSrc;
  std::string method = "brute", seedText;
  auto* mcut = app.add_subcommand("mcut", "Minimum normalized cut");
  mcutSrc.attach(mcut);
  mcut->add_option("--method", method, "brute, formula or pruned")->check(CLI::IsMember({"brute", "formula", "pruned"}));
  mcut->add_option("--seed", seedText, "Pruning seed, comma-separated 1-based vertices");
  mcut->callback([&] {
    action = [&] {
      if (method == "formula") {
        if (!mcutSrc.isFamily()) throw UsageError("--method formula needs --family");
        const FamilySpec s = mcutSrc.spec();
        if (hasMcutFormula(s)) {
          emit(out, cutReportJson(mcutFormula(s)));
        } else {
          Json doc = cutReportJson(mcutBrute(generate(s)));
          doc["fallback"] = "formula undefined for " + s.label();
          emit(out, doc);
        }
        return;
      }
      const Graph g = mcutSrc.graph();
      if (method == "brute") {
        emit(out, cutReportJson(mcutBrute(g)));
        return;
      }
      if (seedText.empty()) throw UsageError("--method pruned needs --seed");
      std::vector<int> seed;
      std::stringstream ss(seedText);
      for (std::string tok; std::getline(ss, tok, ',');) {
        try {
          std::size_t used = 0;
          const int v = std::stoi(tok, &used);
          if (used != tok.size()) throw std::invalid_argument(tok);
          seed.push_back(v - 1);
        } catch (const std::logic_error&) {
          throw UsageError("--seed expects comma-separated integers");
        }
      }
      emit(out, cutReportJson(mcutPruned(g, VertexSubset::fromVertices(g, seed))));
    };
  });

  // lcut
  Source lcutSrc;
  auto* lc = app.add_subcommand("lcut", "Spectral bisection by the Fiedler vector");
  lcutSrc.attach(lc);
  lc->callback([&] {
    action = [&] { emit(out, bisectJson(lcut(lcutSrc.graph(), lcutSrc.involution()))); };
  });

  // compare
  Source cmpSrc;
  auto* cmp = app.add_subcommand("compare", "Mcut against Lcut");
  cmpSrc.attach(cmp);
  cmp->callback([&] {
    action = [&] {
      const Graph g = cmpSrc.graph();
      const CutReport m = bestMcut(cmpSrc, g);
      const BisectReport b = lcut(g, cmpSrc.involution());
      Json doc{{"graph", g.name()},
               {"mcut", rationalJson(m.value)},
               {"mcut_method", methodName(m.method)},
               {"lcut", rationalJson(b.lcut)},
               {"lambda2", jsonNumber(b.lambda2)},
               {"equal", m.value == b.lcut},
               {"mcut_witness", m.witness ? vertexList(*m.witness) : Json(nullptr)},
               {"lcut_positive_side", vertexList(b.positiveSide)},
               {"parity", parityName(b.parity)}};
      doc["alt_orientation_lcut"] = b.altLcut ? rationalJson(*b.altLcut) : Json(nullptr);
      emit(out, doc);
    };
  });

  // charpoly
  std::string which = "pnk";
  int cpN = 0, cpK = 0, steps = 0;
  double lambda = 0;
  bool roots = false;
  auto* cp = app.add_subcommand("charpoly", "Characteristic polynomials of weighted paths and roach graphs");
  cp->add_option("--which", which, "pnk, qnk, product or path")->check(CLI::IsMember({"pnk", "qnk", "product", "path"}));
  cp->add_option("--n", cpN, "n")->required();
  auto* cpKOpt = cp->add_option("--k", cpK, "k");
  auto* lamOpt = cp->add_option("--lambda", lambda, "Evaluation point");
  auto* rootsOpt = cp->add_flag("--roots", roots, "List roots in [0, 2]");
  cp->add_option("--steps", steps, "Grid steps for root scanning");
  lamOpt->excludes(rootsOpt);
  cp->callback([&] {
    action = [&] {
      if (which != "path" && !cpKOpt->count()) throw UsageError("--which " + which + " needs --k");
      std::function<double(double)> f;
      if (which == "pnk") f = [&](double x) { return evalPnk(cpN, cpK, x); };
      if (which == "qnk") f = [&](double x) { return evalQnk(cpN, cpK, x); };
      if (which == "product") f = [&](double x) { return evalPnk(cpN, cpK, x) * evalQnk(cpN, cpK, x); };
      if (which == "path") f = [&](double x) { return evalPathCharpoly(cpN, x); };
      Json doc{{"which", which}, {"n", cpN}};
      if (which != "path") doc["k"] = cpK;
      if (roots) {
        const int order = which == "path" ? cpN : (which == "product" ? 2 : 1) * (cpN + cpK);
        const int grid = steps > 0 ? steps : std::max(2000, 40 * order);
        Json list = Json::array();
        for (const RootBracket& b : bracketRoots(f, 0.0, 2.0, grid)) list.push_back(jsonNumber(b.root()));
        doc["steps"] = grid;
        doc["count"] = list.size();
        doc["roots"] = list;
      } else {
        if (!lamOpt->count()) throw UsageError("charpoly needs --lambda or --roots");
        doc["lambda"] = jsonNumber(lambda);
        doc["value"] = jsonNumber(f(lambda));
      }
      emit(out, doc);
    };
  });

  // sweep
  std::string swFamily, nRange, kRange, swFormat = "csv", swOut;
  auto* sw = app.add_subcommand("sweep", "Tabulate the piecewise Mcut formulas over a grid");
  sw->add_option("--family", swFamily, "roach or weightedpath")->required();
  sw->add_option("--n-range", nRange, "a:b")->required();
  sw->add_option("--k-range", kRange, "a:b")->required();
  sw->add_option("--format", swFormat, "csv or gnuplot")->check(CLI::IsMember({"csv", "gnuplot"}));
  sw->add_option("--out", swOut, "Output path (default stdout)");
  sw->callback([&] {
    action = [&] {
      const auto fam = parseFamily(swFamily);
      if (!fam) throw UsageError("unknown family \"" + swFamily + "\"");
      const auto [n0, n1] = parseRange(nRange, "--n-range");
      const auto [k0, k1] = parseRange(kRange, "--k-range");
      const auto rows = mcutRegionSweep(*fam, n0, n1, k0, k1);
      writeText(swOut, swFormat == "csv" ? sweepCsv(rows) : sweepGnuplot(rows), out);
    };
  });

  // bounds
  Source bSrc;
  auto* bounds = app.add_subcommand("bounds", "Spectral and combinatorial bounds around Mcut");
  bSrc.attach(bounds);
  bounds->callback([&] {
    action = [&] {
      const Graph g = bSrc.graph();
      const double l2n = eigSym(buildMatrix(g, MatrixKind::NormalizedLaplacian)).eigenvalues.at(1);
      const double l2 = eigSym(buildMatrix(g, MatrixKind::DifferenceLaplacian)).eigenvalues.at(1);
      const CutReport m = mcutBrute(g);
      const Rational iso = isoperimetric(g), h = cheegerEdge(g), gv = cheegerVertex(g);
      const double delta = static_cast<double>(g.maxDegree());
      const double hd = h.toDouble(), isod = iso.toDouble();
      constexpr double slack = 1e-9;
      emit(out, Json{{"graph", g.name()},
                     {"lambda2_normalized", jsonNumber(l2n)},
                     {"lambda2_laplacian", jsonNumber(l2)},
                     {"max_degree", g.maxDegree()},
                     {"mcut", rationalJson(m.value)},
                     {"isoperimetric", rationalJson(iso)},
                     {"cheeger_edge", rationalJson(h)},
                     {"cheeger_vertex", rationalJson(gv)},
                     {"checks",
                      {{"lambda2_le_mcut", l2n <= m.value.toDouble() + slack},
                       {"mohar_lower", l2 / 2 <= isod + slack},
                       {"mohar_upper", isod <= std::sqrt(std::max(0.0, (2 * delta - l2) * l2)) + slack},
                       {"chung_lower", hd * hd / 2 < l2n + slack},
                       {"chung_upper", l2n <= 2 * hd + slack}}}});
    };
  });

  // counterexample
  std::string ceRange = "3:4";
  auto* ce = app.add_subcommand("counterexample", "Check Mcut < Lcut on R_{2k,k}");
  ce->add_option("--k-range", ceRange, "a:b (k >= 3)");
  ce->callback([&] {
    action = [&] {
      const auto [k0, k1] = parseRange(ceRange, "--k-range");
      Json list = Json::array();
      for (int k = k0; k <= k1; ++k) list.push_back(counterexampleJson(counterexampleCheck(k)));
      emit(out, Json{{"results", list}});
    };
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    emit(err, errorJson("usage", e.what()));
    return kUsage;
  }

  try {
    if (action) action();
    return kOk;
  } catch (const UsageError& e) {
    emit(err, errorJson("usage", e.what()));
    return kUsage;
  } catch (const SchemaError& e) {
    emit(err, errorJson(e.kind(), e.what()));
    return kSchema;
  } catch (const NumericError& e) {
    Json doc = errorJson(e.kind(), e.what());
    doc["residual"] = jsonNumber(e.residual());
    emit(err, doc);
    return kNumeric;
  } catch (const DomainError& e) {
    emit(err, errorJson(e.kind(), e.what()));
    return kDomain;
  }
}

}  // namespace speclab::cli
