// Copyright 2026 The cpg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cpg/serialize.hpp"

#include "cpg/game_io.hpp"
#include "json.hpp"

namespace cpg {

namespace {

using Json = nlohmann::ordered_json;

Json value(const Rational& r) { return r.to_string(); }
Json value(double d) { return d; }

template <class T>
Json strategy(const MixedStrategy<T>& s) {
  Json out = Json::array();
  for (const auto& p : s.probs()) out.push_back(value(p));
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

template <class T>
Json equilibrium(const BimatrixEquilibrium<T>& eq) {
  Json j;
  j["x"] = strategy(eq.x);
  j["y"] = strategy(eq.y);
  j["support_x"] = eq.support_x;
  j["support_y"] = eq.support_y;
  j["strict"] = eq.strict;
  j["payoffs"] = Json::array({value(eq.payoffs.first), value(eq.payoffs.second)});
  return j;
}

template <class T>
Json single(const SingleEquilibrium<T>& eq) {
  Json j;
  j["x"] = strategy(eq.x);
  j["support"] = eq.support;
  j["strict"] = eq.strict;
  j["payoff"] = value(eq.payoff);
  j["continuum"] = eq.continuum;
  return j;
}

template <class T>
Json rest_point(const RestPoint<T>& rp) {
  Json j;
  j["point"] = strategy(rp.point);
  j["support"] = rp.support;
  j["is_nash"] = rp.is_nash;
  j["common_payoff"] = value(rp.common_payoff);
  j["continuum"] = rp.continuum;
  return j;
}

template <class Range, class F>
Json array_of(const Range& range, F f) {
  Json out = Json::array();
  for (const auto& item : range) out.push_back(f(item));
  return out;
}

Json degeneracy(const DegeneracyReport& report) {
  Json j;
  j["degenerate"] = report.degenerate();
  j["witnesses"] = array_of(report.witnesses, [](const DegeneracyWitness& w) {
    Json item;
    item["support_x"] = w.support_x;
    item["support_y"] = w.support_y;
    item["reason"] = std::string(degeneracy_reason_name(w.reason));
    return item;
  });
  return j;
}

}  // namespace

template <class T>
std::string to_json(const std::vector<BimatrixEquilibrium<T>>& equilibria) {
  return dump(array_of(equilibria, equilibrium<T>));
}

template std::string to_json(const std::vector<BimatrixEquilibrium<Rational>>&);
template std::string to_json(const std::vector<BimatrixEquilibrium<double>>&);

template <class T>
std::string to_json(const std::vector<SingleEquilibrium<T>>& equilibria) {
  return dump(array_of(equilibria, single<T>));
}

template std::string to_json(const std::vector<SingleEquilibrium<Rational>>&);
template std::string to_json(const std::vector<SingleEquilibrium<double>>&);

template <class T>
std::string to_json(const std::vector<RestPoint<T>>& points) {
  return dump(array_of(points, rest_point<T>));
}

template std::string to_json(const std::vector<RestPoint<Rational>>&);
template std::string to_json(const std::vector<RestPoint<double>>&);

std::string to_json(const StabilityClassification& c) {
  Json j;
  j["category"] = std::string(category_name(c.category));
  j["local_type"] = std::string(local_type_name(c.local_type));
  j["eigenvalues"] = array_of(c.eigenvalues, [](const std::complex<double>& e) {
    return Json::array({e.real(), e.imag()});
  });
  if (c.two_species_ess) j["two_species_ess"] = *c.two_species_ess;
  return dump(j);
}

std::string to_json(const DegeneracyReport& report) {
  return dump(degeneracy(report));
}

std::string to_json(const DecompositionReport& report) {
  Json j;
  j["game"] = Json::parse(serialize_game(report.game));
  Json padding;
  padding["player"] = report.padding.player == Player::kRow ? "row" : "col";
  padding["added_count"] = report.padding.added_count;
  padding["dummy_payoff"] = value(report.padding.dummy_payoff);
  padding["original_rows"] = report.padding.original_rows;
  padding["original_cols"] = report.padding.original_cols;
  j["padding"] = padding;
  j["per_permutation"] = array_of(report.per_permutation, [](const PermutationResult& r) {
    Json item;
    item["permutation"] = r.permutation.mapping();
    item["cp1_equilibria"] = array_of(r.cp1_equilibria, single<Rational>);
    item["cp2_equilibria"] = array_of(r.cp2_equilibria, single<Rational>);
    item["matched_pairs"] = array_of(r.matched_pairs, [](const MatchedPair& m) {
      Json pair;
      pair["cp2_index"] = m.cp2_index;
      pair["cp1_index"] = m.cp1_index;
      pair["candidate"] = equilibrium(m.candidate);
      return pair;
    });
    return item;
  });
  j["reconstructed"] = array_of(report.reconstructed, equilibrium<Rational>);
  j["direct_solution"] = array_of(report.direct_solution, equilibrium<Rational>);
  if (report.agreement) j["agreement"] = *report.agreement;
  j["degeneracy"] = degeneracy(report.degeneracy);
  return dump(j);
}

std::string to_json(const VerificationReport& report) {
  Json j;
  j["passed"] = report.passed();
  j["trials"] = report.trials;
  j["discarded_degenerate"] = report.discarded_degenerate;
  j["failures"] = report.failures;
  if (report.counterexample) {
    j["counterexample"] = Json::parse(serialize_game(*report.counterexample));
  }
  return dump(j);
}

}  // namespace cpg
