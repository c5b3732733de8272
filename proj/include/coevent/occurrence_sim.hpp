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

// Occurrence rules for a single elementary income-outcome pair, and a Monte
// Carlo estimate of Phi(R) built on them.
//
// Sampling is at quotient resolution: a draw is (bra-class, terrace), with the
// bra-class drawn from B and the terrace from P independently. Draw i consumes
// outputs 2i and 2i+1 of a SplitMix64 sequence, so any draw can be generated
// directly from (seed, i) and the result does not depend on how the index
// range is split across workers.

#ifndef COEVENT_OCCURRENCE_SIM_HPP_
#define COEVENT_OCCURRENCE_SIM_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "coevent/labelled_universe.hpp"
#include "coevent/measures.hpp"

namespace coevent {

struct ElementaryDraw {
  std::size_t bra_label = 0;
  std::optional<std::size_t> terrace;  // nullopt: the empty terrace

  bool operator==(const ElementaryDraw&) const = default;
};

struct OccurrenceReport {
  LabelMask happened_ket_labels = 0;   // x with |x> happening
  LabelMask experienced_bra_labels = 0;  // x with <x| experienced
  std::vector<std::size_t> experienced_terraced;  // X with <Ter_X| experienced
  bool terrace_happened = false;  // some ter(X), X in S, happened
  bool coevent_occurred = false;
};

OccurrenceReport evaluate_occurrence(const QuotientStructure& q, const ElementaryDraw& draw);

// SplitMix64 (Steele, Lea, Flood 2014) with O(1) jump to any position.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Output number `index` (0-based) of the sequence started at `seed`.
  static std::uint64_t at(std::uint64_t seed, std::uint64_t index);

 private:
  std::uint64_t state_;
};

// Maps uniform 64-bit words onto a finite distribution with exact rational
// masses. Category k is chosen when word < floor(2^64 * F_k).
class CategoricalSampler {
 public:
  explicit CategoricalSampler(const std::vector<Rational>& masses);

  std::size_t pick(std::uint64_t word) const;

 private:
  std::vector<unsigned __int128> cumulative_;
};

ElementaryDraw draw_at(const QuotientStructure& q, const CategoricalSampler& bra,
                       const CategoricalSampler& ket, std::uint64_t seed,
                       std::uint64_t index);

// n independent draws; deterministic in (seed, n).
std::vector<ElementaryDraw> sample(const QuotientStructure& q, const BelievabilityDist& b,
                                   const ProbabilityDist& p, std::uint64_t seed,
                                   std::size_t n);

struct CertaintyEstimate {
  double estimate = 0;
  double standard_error = 0;
  std::uint64_t count_occurred = 0;
  std::uint64_t draws = 0;
};

// Fraction of draws in which the co~event occurred. Throws on an empty input.
CertaintyEstimate estimate_certainty(const QuotientStructure& q,
                                     const std::vector<ElementaryDraw>& draws);

// Streams the same draws as sample(q, b, p, seed, n) through `streams` worker
// threads without materializing them. The result is identical for every
// stream count.
CertaintyEstimate simulate_certainty(const QuotientStructure& q, const BelievabilityDist& b,
                                     const ProbabilityDist& p, std::uint64_t seed,
                                     std::uint64_t n, unsigned streams = 1);

}  // namespace coevent

#endif  // COEVENT_OCCURRENCE_SIM_HPP_
