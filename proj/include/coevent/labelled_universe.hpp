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

// A co~event in extensional form (bra-points, ket-points, a boolean incidence
// relation between them) and the quotient structure it induces:
//
//   * labels x: bra-points grouped by identical relation row. The row is the
//     label's ket-event |x>, the group is its bra-class <x|.
//   * terrace-labels X: sets of labels. ter(X) is the set of ket-points that
//     lie in |x> for exactly the x in X. Terraces partition the ket-points,
//     bra-classes partition the bra-points.
//
// A row with no true cell yields the Omega-empty label. It never appears in a
// terrace-label. Ket-points covered by no |x> form the optional empty terrace,
// which is tracked separately and never listed as a terrace-label.

#ifndef COEVENT_LABELLED_UNIVERSE_HPP_
#define COEVENT_LABELLED_UNIVERSE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coevent/rational.hpp"

namespace coevent {

// Sorted, duplicate-free point indices.
using IndexSet = std::vector<std::size_t>;

// Set of label indices (positions in QuotientStructure::labels()).
using LabelMask = std::uint64_t;

inline constexpr std::size_t kMaxLabels = 64;

class BoolMatrix {
 public:
  BoolMatrix() = default;
  BoolMatrix(std::size_t rows, std::size_t cols, bool fill = false)
      : rows_(rows), cols_(cols), cells_(rows * cols, fill ? 1 : 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c] != 0; }
  void set(std::size_t r, std::size_t c, bool v) { cells_[r * cols_ + c] = v ? 1 : 0; }

  // Cell-wise negation.
  BoolMatrix negated() const;
  std::size_t count() const;

  bool operator==(const BoolMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> cells_;
};

struct MassPoint {
  std::string id;
  Rational mass;

  bool operator==(const MassPoint&) const = default;
};

// Immutable after construction. The constructor validates every invariant and
// throws ValidationError naming the offending field.
class ExtensionalCoEvent {
 public:
  ExtensionalCoEvent(std::vector<MassPoint> bra_points,
                     std::vector<MassPoint> ket_points, BoolMatrix relation);

  const std::vector<MassPoint>& bra_points() const { return bra_points_; }
  const std::vector<MassPoint>& ket_points() const { return ket_points_; }
  const BoolMatrix& relation() const { return relation_; }

  bool operator==(const ExtensionalCoEvent&) const = default;

 private:
  std::vector<MassPoint> bra_points_;
  std::vector<MassPoint> ket_points_;
  BoolMatrix relation_;
};

struct Label {
  std::string id;
  IndexSet ket_event;  // |x>
  IndexSet bra_class;  // <x|
  bool is_omega_empty = false;
};

struct TerraceLabel {
  std::string id;
  LabelMask members = 0;
  IndexSet terrace;  // ter(X)
};

class QuotientStructure {
 public:
  // Prefer derive_labelling(); this constructor only checks the partition and
  // incidence invariants, it does not recompute anything.
  QuotientStructure(std::size_t bra_count, std::size_t ket_count,
                    std::vector<Label> labels,
                    std::vector<TerraceLabel> terrace_labels,
                    IndexSet empty_terrace);

  std::size_t bra_count() const { return bra_count_; }
  std::size_t ket_count() const { return ket_count_; }

  const std::vector<Label>& labels() const { return labels_; }
  const std::vector<TerraceLabel>& terrace_labels() const { return terrace_labels_; }

  // Ket-points in no |x>. Empty when every ket-point is covered.
  const IndexSet& empty_terrace() const { return empty_terrace_; }
  bool has_empty_terrace() const { return !empty_terrace_.empty(); }

  // 1_X(x).
  bool incidence(std::size_t label, std::size_t terrace_label) const;

  // Index of the Omega-empty label, if the relation has an empty row.
  std::optional<std::size_t> omega_empty_label() const;

  // All labels except the Omega-empty one: the universe terrace-labels draw
  // their members from.
  LabelMask member_universe() const;
  // Every label including the Omega-empty one; the bra-side Omega.
  LabelMask all_labels() const;

  std::size_t label_index(const std::string& id) const;
  std::size_t terrace_index(const std::string& id) const;
  // Terrace-label whose member set equals `members`, if S contains it.
  std::optional<std::size_t> find_terrace(LabelMask members) const;

  LabelMask mask_of(std::span<const std::string> label_ids) const;
  std::vector<std::string> ids_of(LabelMask mask) const;

  // Label whose bra-class contains bra-point `bra`.
  std::size_t label_of_bra(std::size_t bra) const;
  // Terrace-label holding ket-point `ket`; nullopt for the empty terrace.
  std::optional<std::size_t> terrace_of_ket(std::size_t ket) const;

  // Throws UnknownIdError when `mask` names a label index that does not exist.
  void check_mask(LabelMask mask) const;

 private:
  std::size_t bra_count_;
  std::size_t ket_count_;
  std::vector<Label> labels_;
  std::vector<TerraceLabel> terrace_labels_;
  IndexSet empty_terrace_;
  std::vector<std::size_t> bra_to_label_;
  std::vector<std::optional<std::size_t>> ket_to_terrace_;
};

// Labels are ordered by the first bra-point of their class and take that
// point's id. Terrace-labels are ordered by member index list and named "X1",
// "X2", ... in that order. Both orders depend only on the bra side, so
// re-deriving from the quotient form of a structure reproduces it exactly.
QuotientStructure derive_labelling(const ExtensionalCoEvent& ext);

// ter(X): ket-points in |x> for x in X and outside |x> for every other label.
// X = 0 yields the empty terrace. Throws when X contains the Omega-empty label.
IndexSet terraced_ket(LabelMask members, const QuotientStructure& q);

// Union of ter(X') over X' containing X; equals the intersection of |x> over X.
IndexSet terraced_ket_second_kind(LabelMask members, const QuotientStructure& q);

// Disjoint union of the bra-classes of X.
IndexSet terraced_bra(LabelMask members, const QuotientStructure& q);

BoolMatrix reconstruct_relation(const QuotientStructure& q);

ExtensionalCoEvent complement_coevent(const ExtensionalCoEvent& ext);

// The M-complement of a labelling: each label x becomes x^c with ket-event
// |Omega> - |x>, and each labelling subset X becomes X^c(c) = {x^c : x not in
// X}, taken over the member universe. Label order matches the source.
struct MComplement {
  std::vector<std::string> label_ids;  // "x1^c", ...
  std::vector<IndexSet> ket_events;
  std::vector<LabelMask> subsets;  // one per source terrace-label
  LabelMask universe = 0;

  LabelMask complement_of(LabelMask members) const { return universe & ~members; }
  bool contains(std::size_t subset, std::size_t label) const {
    return (subsets[subset] >> label) & 1U;
  }
};

MComplement m_complement(const QuotientStructure& q, std::size_t ket_count);

enum class SpecialKind {
  kFullBelievableCertainty,   // <Omega|Omega>
  kNonExperiencedImpossible,  // <empty|empty>
  kFullBelievableRandom,      // <Omega|x>
  kExperiencedCertainty,      // <x|Omega>
  kNonExperiencedRandom,      // <empty|x>
  kExperiencedImpossible,     // <x|empty>
  kFullBelievableImpossible,  // <Omega|empty>
  kNonExperiencedCertainty,   // <empty|Omega>
  kGeneral,
};

std::string to_string(SpecialKind kind);

// Classifies the relation by its shape. Every product with an empty side is
// the empty relation, so an all-false relation always reports
// kNonExperiencedImpossible; use classify_rectangle to name the other
// degenerate products.
SpecialKind classify_special(const ExtensionalCoEvent& ext);

// Classifies the product <bra|ket> of a bra-subset and a ket-subset.
SpecialKind classify_rectangle(const IndexSet& bra, const IndexSet& ket,
                               std::size_t bra_count, std::size_t ket_count);

inline bool contains_label(LabelMask mask, std::size_t label) {
  return (mask >> label) & 1U;
}

std::vector<std::size_t> mask_indices(LabelMask mask);

}  // namespace coevent

#endif  // COEVENT_LABELLED_UNIVERSE_HPP_
