// Copyright 2026 The coevent Authors
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

#include "coevent/measures.hpp"

#include <algorithm>

#include "coevent/errors.hpp"

namespace coevent {
namespace {

// Beyond this many labels the additivity check splits off single labels only
// instead of visiting every subset.
constexpr std::size_t kExhaustiveAdditivityLimit = 12;

void require_sizes(const QuotientStructure& q, const BelievabilityDist& b) {
  if (b.mass().size() != q.labels().size()) {
    throw InconsistentInputError("believability has " + std::to_string(b.mass().size()) +
                                 " entries for " + std::to_string(q.labels().size()) +
                                 " labels");
  }
}

void require_sizes(const QuotientStructure& q, const ProbabilityDist& p) {
  if (p.mass().size() != q.terrace_labels().size()) {
    throw InconsistentInputError("probability has " + std::to_string(p.mass().size()) +
                                 " entries for " +
                                 std::to_string(q.terrace_labels().size()) +
                                 " terrace-labels");
  }
  if (!q.has_empty_terrace() && p.empty_terrace_mass() != 0) {
    throw InconsistentInputError("empty-terrace mass given but no empty terrace exists");
  }
}

Rational sum(const std::vector<Rational>& values) {
  Rational total = 0;
  for (const auto& v : values) total += v;
  return total;
}

std::vector<LabelMask> additivity_probes(std::size_t n) {
  std::vector<LabelMask> probes;
  if (n <= kExhaustiveAdditivityLimit) {
    for (LabelMask m = 1; m < (LabelMask{1} << n); ++m) probes.push_back(m);
  } else {
    LabelMask all = n >= kMaxLabels ? ~LabelMask{0} : (LabelMask{1} << n) - 1;
    for (std::size_t i = 0; i < n; ++i) probes.push_back(all & ~((LabelMask{1} << i) - 1));
  }
  return probes;
}

AxiomCheck nonnegative(const std::string& name, const std::vector<Rational>& values,
                       const std::vector<std::string>& keys) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0) {
      return {name, CheckStatus::kFail,
              keys[i] + " = " + to_fraction_string(values[i])};
    }
  }
  return {name, CheckStatus::kPass, ""};
}

AxiomCheck normalized(const std::string& name, const Rational& total) {
  if (total == 1) return {name, CheckStatus::kPass, ""};
  return {name, CheckStatus::kFail, "sum = " + to_fraction_string(total)};
}

}  // namespace

BelievabilityDist::BelievabilityDist(const QuotientStructure& q, std::vector<Rational> mass)
    : mass_(std::move(mass)) {
  require_sizes(q, *this);
}

BelievabilityDist BelievabilityDist::from_points(const QuotientStructure& q,
                                                 const ExtensionalCoEvent& ext) {
  if (ext.bra_points().size() != q.bra_count()) {
    throw InconsistentInputError("co~event and quotient disagree on bra-point count");
  }
  std::vector<Rational> mass;
  for (const auto& label : q.labels()) {
    Rational total = 0;
    for (auto bra : label.bra_class) total += ext.bra_points()[bra].mass;
    mass.push_back(total);
  }
  return BelievabilityDist(q, std::move(mass));
}

Rational BelievabilityDist::total() const { return sum(mass_); }

ProbabilityDist::ProbabilityDist(const QuotientStructure& q, std::vector<Rational> mass,
                                 Rational empty_terrace_mass)
    : mass_(std::move(mass)), empty_terrace_mass_(std::move(empty_terrace_mass)) {
  require_sizes(q, *this);
}

ProbabilityDist ProbabilityDist::from_points(const QuotientStructure& q,
                                             const ExtensionalCoEvent& ext) {
  if (ext.ket_points().size() != q.ket_count()) {
    throw InconsistentInputError("co~event and quotient disagree on ket-point count");
  }
  std::vector<Rational> mass;
  for (const auto& tl : q.terrace_labels()) {
    Rational total = 0;
    for (auto ket : tl.terrace) total += ext.ket_points()[ket].mass;
    mass.push_back(total);
  }
  Rational empty = 0;
  for (auto ket : q.empty_terrace()) empty += ext.ket_points()[ket].mass;
  return ProbabilityDist(q, std::move(mass), empty);
}

Rational ProbabilityDist::total() const { return sum(mass_) + empty_terrace_mass_; }

Rational believability(LabelMask event, const QuotientStructure& q,
                       const BelievabilityDist& b) {
  require_sizes(q, b);
  q.check_mask(event);
  Rational total = 0;
  for (auto i : mask_indices(event)) total += b.at(i);
  return total;
}

Rational probability_of_label(std::size_t label, const QuotientStructure& q,
                              const ProbabilityDist& p) {
  require_sizes(q, p);
  if (label >= q.labels().size()) {
    throw UnknownIdError("label index " + std::to_string(label) + " is out of range");
  }
  Rational total = 0;
  for (std::size_t t = 0; t < q.terrace_labels().size(); ++t) {
    if (q.incidence(label, t)) total += p.at(t);
  }
  return total;
}

Rational believability_of_terrace(std::size_t terrace_label, const QuotientStructure& q,
                                  const BelievabilityDist& b) {
  if (terrace_label >= q.terrace_labels().size()) {
    throw UnknownIdError("terrace-label index " + std::to_string(terrace_label) +
                         " is out of range");
  }
  return believability(q.terrace_labels()[terrace_label].members, q, b);
}

Rational probability(const IndexSet& ket_event, const QuotientStructure& q,
                     const ProbabilityDist& p) {
  require_sizes(q, p);
  for (auto ket : ket_event) {
    if (ket >= q.ket_count()) {
      throw UnknownIdError("ket-point index " + std::to_string(ket) + " is out of range");
    }
  }
  auto included = [&](const IndexSet& part) {
    return std::includes(ket_event.begin(), ket_event.end(), part.begin(), part.end());
  };
  auto touched = [&](const IndexSet& part) {
    return std::any_of(part.begin(), part.end(), [&](std::size_t k) {
      return std::binary_search(ket_event.begin(), ket_event.end(), k);
    });
  };

  Rational total = 0;
  for (std::size_t t = 0; t < q.terrace_labels().size(); ++t) {
    const auto& terrace = q.terrace_labels()[t].terrace;
    if (included(terrace)) {
      total += p.at(t);
    } else if (touched(terrace)) {
      throw UnrepresentableEventError("ket event splits terrace " +
                                      q.terrace_labels()[t].id);
    }
  }
  if (q.has_empty_terrace()) {
    if (included(q.empty_terrace())) {
      total += p.empty_terrace_mass();
    } else if (touched(q.empty_terrace())) {
      throw UnrepresentableEventError("ket event splits the empty terrace");
    }
  }
  return total;
}

Rational certainty(LabelMask bra_event, const IndexSet& ket_event,
                   const QuotientStructure& q, const BelievabilityDist& b,
                   const ProbabilityDist& p) {
  return believability(bra_event, q, b) * probability(ket_event, q, p);
}

Rational certainty(const IndexSet& bra_points, const IndexSet& ket_points,
                   const ExtensionalCoEvent& ext) {
  auto mass_of = [](const IndexSet& points, const std::vector<MassPoint>& side,
                    const char* what) {
    Rational total = 0;
    for (auto i : points) {
      if (i >= side.size()) {
        throw UnknownIdError(std::string(what) + " index " + std::to_string(i) +
                             " is out of range");
      }
      total += side[i].mass;
    }
    return total;
  };
  return mass_of(bra_points, ext.bra_points(), "bra-point") *
         mass_of(ket_points, ext.ket_points(), "ket-point");
}

CertaintyReport certainty_of_coevent(const QuotientStructure& q,
                                     const BelievabilityDist& b,
                                     const ProbabilityDist& p) {
  require_sizes(q, b);
  require_sizes(q, p);
  const std::size_t labels = q.labels().size();
  const std::size_t terraces = q.terrace_labels().size();

  CertaintyReport report;
  report.cell.assign(labels, std::vector<Rational>(terraces));
  for (std::size_t x = 0; x < labels; ++x) {
    for (std::size_t t = 0; t < terraces; ++t) report.cell[x][t] = b.at(x) * p.at(t);
  }

  for (std::size_t x = 0; x < labels; ++x) {
    report.p_of_label.push_back(probability_of_label(x, q, p));
    report.phi_by_labels += b.at(x) * report.p_of_label.back();
  }
  for (std::size_t t = 0; t < terraces; ++t) {
    report.b_of_terrace.push_back(believability_of_terrace(t, q, b));
    report.phi_by_terraces += report.b_of_terrace.back() * p.at(t);
  }
  for (std::size_t x = 0; x < labels; ++x) {
    for (std::size_t t = 0; t < terraces; ++t) {
      if (q.incidence(x, t)) report.phi_by_cells += report.cell[x][t];
    }
  }
  return report;
}

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kVacuous: return "vacuous (finite)";
  }
  return "fail";
}

bool ComplianceReport::all_pass() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const AxiomCheck& c) { return c.status == CheckStatus::kFail; });
}

const AxiomCheck& ComplianceReport::find(const std::string& name) const {
  for (const auto& check : checks) {
    if (check.name == name) return check;
  }
  throw UnknownIdError("no axiom check named '" + name + "'");
}

ComplianceReport check_axioms(const QuotientStructure& q, const BelievabilityDist& b,
                              const ProbabilityDist& p) {
  require_sizes(q, b);
  require_sizes(q, p);
  ComplianceReport report;

  std::vector<std::string> label_keys;
  for (const auto& label : q.labels()) label_keys.push_back("b[" + label.id + "]");
  std::vector<std::string> terrace_keys;
  for (const auto& tl : q.terrace_labels()) terrace_keys.push_back("p[" + tl.id + "]");

  report.checks.push_back(nonnegative("believability nonnegativity", b.mass(), label_keys));
  report.checks.push_back(normalized("believability normalization", b.total()));

  AxiomCheck b_additive{"believability additivity", CheckStatus::kPass, ""};
  for (LabelMask m : additivity_probes(q.labels().size())) {
    const LabelMask low = m & (~m + 1);
    const Rational whole = believability(m, q, b);
    const Rational parts = believability(low, q, b) + believability(m & ~low, q, b);
    if (whole != parts) {
      b_additive = {"believability additivity", CheckStatus::kFail,
                    "B(" + std::to_string(m) + ") = " + to_fraction_string(whole) +
                        " but parts sum to " + to_fraction_string(parts)};
      break;
    }
  }
  report.checks.push_back(b_additive);
  report.checks.push_back({"believability continuity", CheckStatus::kVacuous, ""});

  std::vector<Rational> p_values = p.mass();
  if (q.has_empty_terrace()) {
    p_values.push_back(p.empty_terrace_mass());
    terrace_keys.push_back("p[empty terrace]");
  }
  report.checks.push_back(nonnegative("probability nonnegativity", p_values, terrace_keys));
  report.checks.push_back(normalized("probability normalization", p.total()));

  // Disjoint terrace unions: P of the union against the sum over its pieces.
  AxiomCheck p_additive{"probability additivity", CheckStatus::kPass, ""};
  IndexSet running;
  Rational running_sum = 0;
  for (std::size_t t = 0; t < q.terrace_labels().size(); ++t) {
    const auto& terrace = q.terrace_labels()[t].terrace;
    IndexSet merged;
    std::set_union(running.begin(), running.end(), terrace.begin(), terrace.end(),
                   std::back_inserter(merged));
    running = std::move(merged);
    running_sum += p.at(t);
    const Rational whole = probability(running, q, p);
    if (whole != running_sum) {
      p_additive = {"probability additivity", CheckStatus::kFail,
                    "P(X1..X" + std::to_string(t + 1) + ") = " + to_fraction_string(whole) +
                        " but pieces sum to " + to_fraction_string(running_sum)};
      break;
    }
  }
  report.checks.push_back(p_additive);
  report.checks.push_back({"probability continuity", CheckStatus::kVacuous, ""});

  IndexSet all_kets(q.ket_count());
  for (std::size_t k = 0; k < all_kets.size(); ++k) all_kets[k] = k;
  const Rational phi_full = certainty(q.all_labels(), all_kets, q, b, p);
  report.checks.push_back(normalized("certainty normalization", phi_full));

  // The bra-ket cells <x|ter(X)> (plus the empty-terrace column) are disjoint
  // and cover <Omega|Omega>.
  Rational cells = 0;
  for (std::size_t x = 0; x < q.labels().size(); ++x) {
    const LabelMask single = LabelMask{1} << x;
    for (const auto& tl : q.terrace_labels()) cells += certainty(single, tl.terrace, q, b, p);
    if (q.has_empty_terrace()) cells += certainty(single, q.empty_terrace(), q, b, p);
  }
  if (cells == phi_full) {
    report.checks.push_back({"certainty additivity", CheckStatus::kPass, ""});
  } else {
    report.checks.push_back({"certainty additivity", CheckStatus::kFail,
                             "cells sum to " + to_fraction_string(cells) +
                                 " but Phi(<Omega|Omega>) = " + to_fraction_string(phi_full)});
  }
  report.checks.push_back({"certainty continuity", CheckStatus::kVacuous, ""});
  return report;
}

}  // namespace coevent
