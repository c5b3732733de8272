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

#include "coevent/labelled_universe.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "coevent/errors.hpp"

namespace coevent {
namespace {

LabelMask low_bits(std::size_t n) {
  return n >= kMaxLabels ? ~LabelMask{0} : (LabelMask{1} << n) - 1;
}

void validate_side(const std::vector<MassPoint>& points, const std::string& side) {
  if (points.empty()) throw ValidationError(side, "must contain at least one point");
  std::set<std::string> seen;
  Rational total = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& point = points[i];
    const std::string where = side + "[" + std::to_string(i) + "]";
    if (point.id.empty()) throw ValidationError(where + ".id", "empty identifier");
    if (!seen.insert(point.id).second) {
      throw ValidationError(where + ".id", "duplicate identifier '" + point.id + "'");
    }
    if (point.mass < 0) {
      throw ValidationError(where + ".mass",
                            "negative mass " + to_fraction_string(point.mass));
    }
    total += point.mass;
  }
  if (total != 1) {
    throw ValidationError(side, "masses sum to " + to_fraction_string(total) +
                                    ", expected exactly 1");
  }
}

bool lex_less_members(LabelMask a, LabelMask b) {
  const auto ia = mask_indices(a);
  const auto ib = mask_indices(b);
  return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_full(const IndexSet& s, std::size_t n) { return s.size() == n; }

}  // namespace

std::vector<std::size_t> mask_indices(LabelMask mask) {
  std::vector<std::size_t> out;
  while (mask != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

BoolMatrix BoolMatrix::negated() const {
  BoolMatrix out = *this;
  for (auto& cell : out.cells_) cell = cell ? 0 : 1;
  return out;
}

std::size_t BoolMatrix::count() const {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), 1));
}

ExtensionalCoEvent::ExtensionalCoEvent(std::vector<MassPoint> bra_points,
                                       std::vector<MassPoint> ket_points,
                                       BoolMatrix relation)
    : bra_points_(std::move(bra_points)),
      ket_points_(std::move(ket_points)),
      relation_(std::move(relation)) {
  validate_side(bra_points_, "bra_points");
  validate_side(ket_points_, "ket_points");
  if (relation_.rows() != bra_points_.size() || relation_.cols() != ket_points_.size()) {
    throw ValidationError(
        "relation", "dimensions " + std::to_string(relation_.rows()) + "x" +
                        std::to_string(relation_.cols()) + " do not match " +
                        std::to_string(bra_points_.size()) + " bra-points x " +
                        std::to_string(ket_points_.size()) + " ket-points");
  }
}

QuotientStructure::QuotientStructure(std::size_t bra_count, std::size_t ket_count,
                                     std::vector<Label> labels,
                                     std::vector<TerraceLabel> terrace_labels,
                                     IndexSet empty_terrace)
    : bra_count_(bra_count),
      ket_count_(ket_count),
      labels_(std::move(labels)),
      terrace_labels_(std::move(terrace_labels)),
      empty_terrace_(std::move(empty_terrace)),
      bra_to_label_(bra_count, labels_.size()),
      ket_to_terrace_(ket_count) {
  if (labels_.size() > kMaxLabels) {
    throw ValidationError("labels", "at most 64 labels are supported, got " +
                                        std::to_string(labels_.size()));
  }
  std::size_t empty_labels = 0;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    const auto& label = labels_[i];
    if (label.is_omega_empty != label.ket_event.empty()) {
      throw ValidationError("labels[" + std::to_string(i) + "]",
                            "Omega-empty flag disagrees with ket-event");
    }
    if (label.is_omega_empty) ++empty_labels;
    if (label.bra_class.empty()) {
      throw ValidationError("labels[" + std::to_string(i) + "]", "empty bra-class");
    }
    for (auto bra : label.bra_class) {
      if (bra >= bra_count_ || bra_to_label_[bra] != labels_.size()) {
        throw ValidationError("labels[" + std::to_string(i) + "].bra_class",
                              "bra-classes must partition the bra-points");
      }
      bra_to_label_[bra] = i;
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (labels_[j].ket_event == label.ket_event) {
        throw ValidationError("labels[" + std::to_string(i) + "]",
                              "duplicate ket-event");
      }
    }
  }
  if (empty_labels > 1) throw ValidationError("labels", "more than one Omega-empty label");
  if (std::find(bra_to_label_.begin(), bra_to_label_.end(), labels_.size()) !=
      bra_to_label_.end()) {
    throw ValidationError("labels", "bra-classes do not cover every bra-point");
  }

  const LabelMask universe = member_universe();
  std::vector<bool> covered(ket_count_, false);
  auto claim = [&](const IndexSet& points, std::optional<std::size_t> owner,
                   const std::string& where) {
    for (auto ket : points) {
      if (ket >= ket_count_ || covered[ket]) {
        throw ValidationError(where, "terraces must partition the ket-points");
      }
      covered[ket] = true;
      ket_to_terrace_[ket] = owner;
    }
  };
  for (std::size_t t = 0; t < terrace_labels_.size(); ++t) {
    const auto& tl = terrace_labels_[t];
    const std::string where = "terrace_labels[" + std::to_string(t) + "]";
    if (tl.members == 0 || (tl.members & ~universe) != 0) {
      throw ValidationError(where, "members must be a nonempty subset of the labels "
                                   "without the Omega-empty label");
    }
    if (tl.terrace.empty()) throw ValidationError(where, "empty terrace");
    claim(tl.terrace, t, where);
  }
  claim(empty_terrace_, std::nullopt, "empty_terrace");
  if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
    throw ValidationError("terrace_labels", "terraces do not cover every ket-point");
  }

  // |x> must be exactly the union of the terraces whose members contain x.
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    IndexSet expected;
    for (const auto& tl : terrace_labels_) {
      if (contains_label(tl.members, i)) expected = set_union(expected, tl.terrace);
    }
    if (expected != labels_[i].ket_event) {
      throw ValidationError("labels[" + std::to_string(i) + "].ket_event",
                            "inconsistent with terrace membership");
    }
  }
}

bool QuotientStructure::incidence(std::size_t label, std::size_t terrace_label) const {
  return contains_label(terrace_labels_.at(terrace_label).members, label);
}

std::optional<std::size_t> QuotientStructure::omega_empty_label() const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].is_omega_empty) return i;
  }
  return std::nullopt;
}

LabelMask QuotientStructure::all_labels() const { return low_bits(labels_.size()); }

LabelMask QuotientStructure::member_universe() const {
  LabelMask mask = all_labels();
  if (auto e = omega_empty_label()) mask &= ~(LabelMask{1} << *e);
  return mask;
}

std::size_t QuotientStructure::label_index(const std::string& id) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].id == id) return i;
  }
  throw UnknownIdError("unknown label id '" + id + "'");
}

std::size_t QuotientStructure::terrace_index(const std::string& id) const {
  for (std::size_t i = 0; i < terrace_labels_.size(); ++i) {
    if (terrace_labels_[i].id == id) return i;
  }
  throw UnknownIdError("unknown terrace-label id '" + id + "'");
}

std::optional<std::size_t> QuotientStructure::find_terrace(LabelMask members) const {
  for (std::size_t i = 0; i < terrace_labels_.size(); ++i) {
    if (terrace_labels_[i].members == members) return i;
  }
  return std::nullopt;
}

LabelMask QuotientStructure::mask_of(std::span<const std::string> label_ids) const {
  LabelMask mask = 0;
  for (const auto& id : label_ids) mask |= LabelMask{1} << label_index(id);
  return mask;
}

std::vector<std::string> QuotientStructure::ids_of(LabelMask mask) const {
  check_mask(mask);
  std::vector<std::string> ids;
  for (auto i : mask_indices(mask)) ids.push_back(labels_[i].id);
  return ids;
}

std::size_t QuotientStructure::label_of_bra(std::size_t bra) const {
  return bra_to_label_.at(bra);
}

std::optional<std::size_t> QuotientStructure::terrace_of_ket(std::size_t ket) const {
  return ket_to_terrace_.at(ket);
}

void QuotientStructure::check_mask(LabelMask mask) const {
  if ((mask & ~all_labels()) != 0) {
    throw UnknownIdError("label index " +
                         std::to_string(std::countr_zero(mask & ~all_labels())) +
                         " is out of range");
  }
}

QuotientStructure derive_labelling(const ExtensionalCoEvent& ext) {
  const auto& rel = ext.relation();
  const std::size_t bra_count = rel.rows();
  const std::size_t ket_count = rel.cols();

  // Group bra-points by cross-section, keeping groups in order of first
  // appearance.
  std::vector<std::pair<IndexSet, IndexSet>> groups;
  std::map<IndexSet, std::size_t> group_of;
  for (std::size_t b = 0; b < bra_count; ++b) {
    IndexSet row;
    for (std::size_t k = 0; k < ket_count; ++k) {
      if (rel.get(b, k)) row.push_back(k);
    }
    auto [it, inserted] = group_of.try_emplace(row, groups.size());
    if (inserted) groups.push_back({row, {}});
    groups[it->second].second.push_back(b);
  }

  const std::size_t non_empty = groups.size() - (group_of.count(IndexSet{}) ? 1 : 0);
  if (non_empty > kMaxLabels) {
    throw ValidationError("relation", "more than 64 distinct non-empty rows (" +
                                          std::to_string(non_empty) + ")");
  }
  if (groups.size() > kMaxLabels) {
    throw ValidationError("relation", "more than 64 labels including the Omega-empty one");
  }

  std::vector<Label> labels;
  for (auto& [ket_event, bra_class] : groups) {
    Label label;
    label.id = ext.bra_points()[bra_class.front()].id;
    label.is_omega_empty = ket_event.empty();
    label.ket_event = ket_event;
    label.bra_class = bra_class;
    labels.push_back(std::move(label));
  }

  // Group ket-points by membership vector over the labels.
  std::map<LabelMask, IndexSet> by_members;
  for (std::size_t k = 0; k < ket_count; ++k) {
    LabelMask members = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (std::binary_search(labels[i].ket_event.begin(), labels[i].ket_event.end(), k)) {
        members |= LabelMask{1} << i;
      }
    }
    by_members[members].push_back(k);
  }

  IndexSet empty_terrace;
  std::vector<TerraceLabel> terraces;
  for (auto& [members, points] : by_members) {
    if (members == 0) {
      empty_terrace = points;
    } else {
      terraces.push_back(TerraceLabel{"", members, points});
    }
  }
  std::sort(terraces.begin(), terraces.end(),
            [](const TerraceLabel& a, const TerraceLabel& b) {
              return lex_less_members(a.members, b.members);
            });
  for (std::size_t t = 0; t < terraces.size(); ++t) {
    terraces[t].id = "X" + std::to_string(t + 1);
  }

  return QuotientStructure(bra_count, ket_count, std::move(labels), std::move(terraces),
                           std::move(empty_terrace));
}

IndexSet terraced_ket(LabelMask members, const QuotientStructure& q) {
  q.check_mask(members);
  if ((members & ~q.member_universe()) != 0) {
    throw UnknownIdError("the Omega-empty label cannot be a terrace member");
  }
  if (members == 0) return q.empty_terrace();
  if (auto t = q.find_terrace(members)) return q.terrace_labels()[*t].terrace;
  return {};
}

IndexSet terraced_ket_second_kind(LabelMask members, const QuotientStructure& q) {
  q.check_mask(members);
  if ((members & ~q.member_universe()) != 0) {
    throw UnknownIdError("the Omega-empty label cannot be a terrace member");
  }
  IndexSet out;
  for (const auto& tl : q.terrace_labels()) {
    if ((tl.members & members) == members) out = set_union(out, tl.terrace);
  }
  if (members == 0) out = set_union(out, q.empty_terrace());
  return out;
}

IndexSet terraced_bra(LabelMask members, const QuotientStructure& q) {
  q.check_mask(members);
  IndexSet out;
  for (auto i : mask_indices(members)) out = set_union(out, q.labels()[i].bra_class);
  return out;
}

BoolMatrix reconstruct_relation(const QuotientStructure& q) {
  BoolMatrix rel(q.bra_count(), q.ket_count());
  for (std::size_t i = 0; i < q.labels().size(); ++i) {
    for (std::size_t t = 0; t < q.terrace_labels().size(); ++t) {
      if (!q.incidence(i, t)) continue;
      for (auto b : q.labels()[i].bra_class) {
        for (auto k : q.terrace_labels()[t].terrace) rel.set(b, k, true);
      }
    }
  }
  return rel;
}

ExtensionalCoEvent complement_coevent(const ExtensionalCoEvent& ext) {
  return ExtensionalCoEvent(ext.bra_points(), ext.ket_points(), ext.relation().negated());
}

MComplement m_complement(const QuotientStructure& q, std::size_t ket_count) {
  if (ket_count != q.ket_count()) {
    throw InconsistentInputError("ket count " + std::to_string(ket_count) +
                                 " does not match the quotient structure (" +
                                 std::to_string(q.ket_count()) + ")");
  }
  MComplement out;
  out.universe = q.member_universe();
  for (const auto& label : q.labels()) {
    out.label_ids.push_back(label.id + "^c");
    IndexSet complement;
    for (std::size_t k = 0; k < ket_count; ++k) {
      if (!std::binary_search(label.ket_event.begin(), label.ket_event.end(), k)) {
        complement.push_back(k);
      }
    }
    out.ket_events.push_back(std::move(complement));
  }
  for (const auto& tl : q.terrace_labels()) {
    out.subsets.push_back(out.complement_of(tl.members));
  }
  return out;
}

std::string to_string(SpecialKind kind) {
  switch (kind) {
    case SpecialKind::kFullBelievableCertainty: return "full-believable-certainty";
    case SpecialKind::kNonExperiencedImpossible: return "non-experienced-impossible";
    case SpecialKind::kFullBelievableRandom: return "full-believable-random";
    case SpecialKind::kExperiencedCertainty: return "experienced-certainty";
    case SpecialKind::kNonExperiencedRandom: return "non-experienced-random";
    case SpecialKind::kExperiencedImpossible: return "experienced-impossible";
    case SpecialKind::kFullBelievableImpossible: return "full-believable-impossible";
    case SpecialKind::kNonExperiencedCertainty: return "non-experienced-certainty";
    case SpecialKind::kGeneral: return "general";
  }
  return "general";
}

SpecialKind classify_rectangle(const IndexSet& bra, const IndexSet& ket,
                               std::size_t bra_count, std::size_t ket_count) {
  const bool bra_full = is_full(bra, bra_count);
  const bool ket_full = is_full(ket, ket_count);
  const bool bra_empty = bra.empty();
  const bool ket_empty = ket.empty();
  if (bra_empty && ket_empty) return SpecialKind::kNonExperiencedImpossible;
  if (bra_full && ket_full) return SpecialKind::kFullBelievableCertainty;
  if (bra_full && ket_empty) return SpecialKind::kFullBelievableImpossible;
  if (bra_empty && ket_full) return SpecialKind::kNonExperiencedCertainty;
  if (bra_full) return SpecialKind::kFullBelievableRandom;
  if (ket_full) return SpecialKind::kExperiencedCertainty;
  if (bra_empty) return SpecialKind::kNonExperiencedRandom;
  if (ket_empty) return SpecialKind::kExperiencedImpossible;
  return SpecialKind::kGeneral;
}

SpecialKind classify_special(const ExtensionalCoEvent& ext) {
  const auto& rel = ext.relation();
  if (rel.count() == 0) return SpecialKind::kNonExperiencedImpossible;

  // A nonempty product <A|B> has every row either equal to B or empty, and
  // A is the set of nonempty rows.
  IndexSet rows;
  IndexSet cols;
  std::optional<IndexSet> shared;
  for (std::size_t b = 0; b < rel.rows(); ++b) {
    IndexSet row;
    for (std::size_t k = 0; k < rel.cols(); ++k) {
      if (rel.get(b, k)) row.push_back(k);
    }
    if (row.empty()) continue;
    if (shared && *shared != row) return SpecialKind::kGeneral;
    shared = row;
    rows.push_back(b);
  }
  return classify_rectangle(rows, *shared, rel.rows(), rel.cols());
}

}  // namespace coevent
