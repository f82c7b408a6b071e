// Copyright 2026 The bpmax Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "instance_json.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "bpmax/functions.h"

namespace bpmax::cli {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& message) {
  throw std::invalid_argument(message);
}

void CheckKeys(const json& node, const std::string& where,
               std::initializer_list<const char*> allowed) {
  if (!node.is_object()) Fail(where + ": expected an object");
  for (const auto& [key, value] : node.items()) {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const char* a) { return key == a; });
    if (!known) Fail(where + ": unknown key '" + key + "'");
  }
}

double Real(const json& node, const char* key, const std::string& where) {
  if (!node.contains(key)) Fail(where + ": missing '" + key + "'");
  if (!node[key].is_number()) Fail(where + ": '" + key + "' must be a number");
  return node[key].get<double>();
}

double RealOr(const json& node, const char* key, double fallback,
              const std::string& where) {
  return node.contains(key) ? Real(node, key, where) : fallback;
}

int Int(const json& node, const char* key, const std::string& where) {
  if (!node.contains(key)) Fail(where + ": missing '" + key + "'");
  if (!node[key].is_number_integer()) {
    Fail(where + ": '" + key + "' must be an integer");
  }
  return node[key].get<int>();
}

int IntOr(const json& node, const char* key, int fallback,
          const std::string& where) {
  return node.contains(key) ? Int(node, key, where) : fallback;
}

std::vector<double> Reals(const json& node, const char* key,
                          const std::string& where) {
  if (!node.contains(key) || !node[key].is_array()) {
    Fail(where + ": '" + key + "' must be an array of numbers");
  }
  std::vector<double> out;
  for (const json& x : node[key]) {
    if (!x.is_number()) Fail(where + ": '" + key + "' must hold numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

ElementSet IdSet(const json& ids, int n, const std::string& where) {
  if (!ids.is_array()) Fail(where + ": expected an array of element ids");
  ElementSet s;
  for (const json& x : ids) {
    if (!x.is_number_integer()) Fail(where + ": element ids must be integers");
    const int v = x.get<int>();
    if (v < 0 || v >= n) {
      Fail(where + ": element id " + std::to_string(v) + " out of range");
    }
    s = s.With(v);
  }
  return s;
}

bool WantHidden(const json& node, const std::string& where) {
  const std::string variant = node.value("variant", std::string("hidden"));
  if (variant == "hidden") return true;
  if (variant == "plain") return false;
  Fail(where + ": variant must be 'hidden' or 'plain'");
}

std::vector<double> SizedWeights(const json& node, int n,
                                 const std::string& where) {
  std::vector<double> weights = Reals(node, "weights", where);
  if (static_cast<int>(weights.size()) != n) {
    Fail(where + ": expected " + std::to_string(n) + " weights");
  }
  return weights;
}

ConvexShape ParseShape(const json& node, const std::string& where) {
  CheckKeys(node, where, {"type", "p", "knots"});
  const std::string type = node.value("type", std::string());
  if (type == "power") return ConvexShape::Power(Real(node, "p", where));
  if (type == "piecewise") {
    if (!node.contains("knots") || !node["knots"].is_array()) {
      Fail(where + ": 'knots' must be an array of [t, value] pairs");
    }
    std::vector<std::pair<double, double>> knots;
    for (const json& knot : node["knots"]) {
      if (!knot.is_array() || knot.size() != 2 || !knot[0].is_number() ||
          !knot[1].is_number()) {
        Fail(where + ": each knot must be [t, value]");
      }
      knots.emplace_back(knot[0].get<double>(), knot[1].get<double>());
    }
    return ConvexShape::PiecewiseLinear(std::move(knots));
  }
  Fail(where + ": shape type must be 'power' or 'piecewise'");
}

}  // namespace

SetFunction ParseFamily(const json& node, int n) {
  if (!node.is_object() || !node.contains("family") ||
      !node["family"].is_string()) {
    Fail("function node needs a string 'family'");
  }
  const std::string family = node["family"].get<std::string>();
  const std::string where = "family '" + family + "'";

  if (family == "zero") {
    CheckKeys(node, where, {"family"});
    return MakeZero(n);
  }
  if (family == "modular") {
    CheckKeys(node, where, {"family", "weights"});
    return MakeModular(SizedWeights(node, n, where));
  }
  if (family == "exp1_f") {
    CheckKeys(node, where, {"family", "k", "alpha"});
    return MakeExp1F(n, IntOr(node, "k", n / 2, where),
                     Real(node, "alpha", where));
  }
  if (family == "exp1_g") {
    CheckKeys(node, where, {"family", "k", "beta", "epsilon"});
    return MakeExp1G(n, IntOr(node, "k", n / 2, where),
                     Real(node, "beta", where),
                     RealOr(node, "epsilon", kDefaultEpsilon, where));
  }
  if (family == "exp2_f") {
    CheckKeys(node, where, {"family", "k", "alpha"});
    return MakeExp2F(n, IntOr(node, "k", n / 2, where),
                     Real(node, "alpha", where));
  }
  if (family == "exp2_g") {
    CheckKeys(node, where, {"family", "k", "beta"});
    return MakeExp2G(n, IntOr(node, "k", n / 2, where),
                     Real(node, "beta", where));
  }
  if (family == "power") {
    CheckKeys(node, where, {"family", "alpha"});
    return MakePowerSupermodular(n, Real(node, "alpha", where));
  }
  if (family == "convex_of_modular") {
    CheckKeys(node, where, {"family", "weights", "shape"});
    if (!node.contains("shape")) Fail(where + ": missing 'shape'");
    return MakeConvexOfModular(SizedWeights(node, n, where),
                               ParseShape(node["shape"], where + " shape"));
  }
  if (family == "hardness_card") {
    CheckKeys(node, where, {"family", "hidden", "variant"});
    if (!node.contains("hidden")) Fail(where + ": missing 'hidden'");
    HiddenPair pair =
        MakeHardnessCardinalityPair(n, IdSet(node["hidden"], n, where));
    return WantHidden(node, where) ? pair.hidden : pair.plain;
  }
  if (family == "hardness_beta") {
    CheckKeys(node, where,
              {"family", "alpha", "gamma", "beta", "hidden", "variant"});
    if (!node.contains("hidden")) Fail(where + ": missing 'hidden'");
    HiddenPair pair = MakeHardnessBetaPair(
        n, Int(node, "alpha", where), Int(node, "gamma", where),
        Real(node, "beta", where), IdSet(node["hidden"], n, where));
    return WantHidden(node, where) ? pair.hidden : pair.plain;
  }
  if (family == "setpacking") {
    CheckKeys(node, where, {"family", "k", "beta"});
    return MakeSetPacking(n, Int(node, "k", where), Real(node, "beta", where));
  }
  if (family == "non_bp") {
    CheckKeys(node, where, {"family"});
    return MakeNonBp(n);
  }
  if (family == "ratio_counterexample") {
    CheckKeys(node, where, {"family", "a", "epsilon"});
    return MakeRatioCounterexample(n, IntOr(node, "a", 0, where),
                                   Real(node, "epsilon", where));
  }
  if (family == "hidden_dip") {
    CheckKeys(node, where, {"family", "hidden", "variant"});
    if (!node.contains("hidden")) Fail(where + ": missing 'hidden'");
    HiddenPair pair = MakeHiddenDip(n, IdSet(node["hidden"], n, where));
    return WantHidden(node, where) ? pair.hidden : pair.plain;
  }
  Fail("unknown family '" + family + "'");
}

BpInstance ParseInstance(const json& doc) {
  CheckKeys(doc, "instance", {"n", "f", "g", "lambda"});
  const int n = Int(doc, "n", "instance");
  if (n < 1 || n > kMaxGroundSize) Fail("instance: n must be in [1, 64]");
  SetFunction f = doc.contains("f") ? ParseFamily(doc["f"], n) : MakeZero(n);
  SetFunction g = doc.contains("g") ? ParseFamily(doc["g"], n) : MakeZero(n);
  BpInstance instance(std::move(f), std::move(g));
  if (doc.contains("lambda")) {
    const double lambda = Real(doc, "lambda", "instance");
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
      Fail("instance: lambda must lie in [0, 1]");
    }
    return instance.Scaled(lambda, 1.0 - lambda);
  }
  return instance;
}

Constraint ParseConstraint(const json& doc, int n) {
  if (!doc.is_object() || !doc.contains("type") || !doc["type"].is_string()) {
    Fail("constraint needs a string 'type'");
  }
  const std::string type = doc["type"].get<std::string>();
  const std::string where = "constraint '" + type + "'";
  if (type == "cardinality" || type == "uniform") {
    CheckKeys(doc, where, {"type", "k"});
    const int k = Int(doc, "k", where);
    return type == "cardinality" ? Constraint::Cardinality(n, k)
                                 : Constraint::UniformMatroid(n, k);
  }
  if (type == "partition") {
    CheckKeys(doc, where, {"type", "blocks", "capacities"});
    if (!doc.contains("blocks") || !doc["blocks"].is_array()) {
      Fail(where + ": 'blocks' must be an array of id arrays");
    }
    std::vector<ElementSet> blocks;
    for (const json& block : doc["blocks"]) {
      blocks.push_back(IdSet(block, n, where));
    }
    std::vector<int> capacities;
    if (!doc.contains("capacities") || !doc["capacities"].is_array()) {
      Fail(where + ": 'capacities' must be an array of integers");
    }
    for (const json& cap : doc["capacities"]) {
      if (!cap.is_number_integer()) Fail(where + ": capacities are integers");
      capacities.push_back(cap.get<int>());
    }
    return Constraint::PartitionMatroid(n, std::move(blocks),
                                        std::move(capacities));
  }
  if (type == "explicit") {
    CheckKeys(doc, where, {"type", "family"});
    if (!doc.contains("family") || !doc["family"].is_array()) {
      Fail(where + ": 'family' must be an array of id arrays");
    }
    std::vector<ElementSet> family;
    for (const json& member : doc["family"]) {
      family.push_back(IdSet(member, n, where));
    }
    return Constraint::ExplicitMatroid(n, std::move(family));
  }
  if (type == "intersection") {
    CheckKeys(doc, where, {"type", "of"});
    if (!doc.contains("of") || !doc["of"].is_array() || doc["of"].empty()) {
      Fail(where + ": 'of' must be a non-empty array of constraints");
    }
    std::vector<Constraint> parts;
    for (const json& part : doc["of"])
      parts.push_back(ParseConstraint(part, n));
    return Constraint::Intersection(std::move(parts));
  }
  Fail("unknown constraint type '" + type + "'");
}

ElementSet ParseSet(std::string_view text, int n) {
  std::string cleaned;
  for (char ch : text) {
    if (ch == '[' || ch == ']' || ch == '{' || ch == '}') continue;
    cleaned.push_back(ch == ',' ? ' ' : ch);
  }
  std::istringstream in(cleaned);
  ElementSet s;
  std::string token;
  while (in >> token) {
    if (!std::all_of(token.begin(), token.end(),
                     [](unsigned char c) { return std::isdigit(c); })) {
      Fail("bad element id '" + token + "' in set '" + std::string(text) + "'");
    }
    const int v = std::stoi(token);
    if (v >= n) Fail("element id " + token + " out of range");
    s = s.With(v);
  }
  return s;
}

json LoadJsonArgument(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') {
    return json::parse(arg);
  }
  std::ifstream in(arg);
  if (!in) Fail("cannot open '" + arg + "'");
  return json::parse(in);
}

}  // namespace bpmax::cli
