// Copyright 2026 The speclab Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "speclab/bisect.hpp"
#include "speclab/cuts.hpp"
#include "speclab/graph.hpp"
#include "speclab/rational.hpp"
#include "speclab/spectra.hpp"

namespace speclab {

using Json = nlohmann::ordered_json;

// Graph documents: {"name", "n", "edges": [[u,v,w]...], "loops": [[v,w]...]},
// vertices 1-based. A missing edge weight means 1. Any malformed document
// raises SchemaError.
Graph graphFromJson(const Json& doc);
Graph readGraphFile(const std::string& path);
Json graphToJson(const Graph& g);
std::string graphToDot(const Graph& g);

// Rounds to 15 significant digits; -0 becomes 0 and non-finite values null.
Json jsonNumber(double x);
// {"num", "den", "float"}; num/den are strings when they overflow int64.
Json rationalJson(const Rational& r);
// 1-based, ascending.
Json vertexList(const VertexSubset& s);
// Plain decimal text, 15 significant digits, locale independent.
std::string formatDouble(double x);

Json spectrumJson(const Spectrum& s, bool withVectors);
Json closedFormJson(const ClosedFormSpectrum& s, MatrixKind kind, bool withVectors);
Json cutReportJson(const CutReport& r);
Json bisectJson(const BisectReport& r);
Json counterexampleJson(const CounterexampleVerdict& v);

// Header n,k,branch,value_num,value_den,value_float.
std::string sweepCsv(const std::vector<SweepRow>& rows);
// Whitespace columns "n k branch_id value" with the branch ids listed in
// comment lines, for gnuplot's splot/plot with palette.
std::string sweepGnuplot(const std::vector<SweepRow>& rows);

}  // namespace speclab
