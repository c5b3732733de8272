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

#include "coevent/occurrence_sim.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "coevent/errors.hpp"

namespace coevent {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<Rational> ket_masses(const QuotientStructure& q, const ProbabilityDist& p) {
  std::vector<Rational> masses = p.mass();
  if (q.has_empty_terrace()) masses.push_back(p.empty_terrace_mass());
  return masses;
}

CertaintyEstimate finish(std::uint64_t occurred, std::uint64_t n) {
  CertaintyEstimate e;
  e.count_occurred = occurred;
  e.draws = n;
  e.estimate = static_cast<double>(occurred) / static_cast<double>(n);
  e.standard_error = std::sqrt(e.estimate * (1.0 - e.estimate) / static_cast<double>(n));
  return e;
}

}  // namespace

OccurrenceReport evaluate_occurrence(const QuotientStructure& q, const ElementaryDraw& draw) {
  if (draw.bra_label >= q.labels().size()) {
    throw UnknownIdError("draw names unknown label index " + std::to_string(draw.bra_label));
  }
  if (draw.terrace && *draw.terrace >= q.terrace_labels().size()) {
    throw UnknownIdError("draw names unknown terrace-label index " +
                         std::to_string(*draw.terrace));
  }
  if (!draw.terrace && !q.has_empty_terrace()) {
    throw UnknownIdError("draw names the empty terrace, which this structure lacks");
  }

  OccurrenceReport report;
  const LabelMask drawn = draw.terrace ? q.terrace_labels()[*draw.terrace].members : 0;
  report.terrace_happened = draw.terrace.has_value();
  // |x> happens iff the outcome lies in it, i.e. x is a member of the drawn
  // terrace; <x| is experienced exactly when |x> happens.
  report.happened_ket_labels = drawn;
  report.experienced_bra_labels = drawn;
  for (std::size_t t = 0; t < q.terrace_labels().size(); ++t) {
    if ((q.terrace_labels()[t].members & ~drawn) == 0) report.experienced_terraced.push_back(t);
  }
  report.coevent_occurred = contains_label(drawn, draw.bra_label);
  return report;
}

std::uint64_t SplitMix64::next() {
  state_ += kGolden;
  return mix(state_);
}

std::uint64_t SplitMix64::at(std::uint64_t seed, std::uint64_t index) {
  return mix(seed + (index + 1) * kGolden);
}

CategoricalSampler::CategoricalSampler(const std::vector<Rational>& masses) {
  if (masses.empty()) throw ValidationError("distribution", "no categories");
  Rational total = 0;
  for (const auto& m : masses) {
    if (m < 0) throw ValidationError("distribution", "negative mass");
    total += m;
  }
  if (total != 1) {
    throw ValidationError("distribution",
                          "masses sum to " + to_fraction_string(total) + ", expected 1");
  }
  const BigInt two64 = BigInt(1) << 64;
  Rational running = 0;
  for (std::size_t k = 0; k < masses.size(); ++k) {
    running += masses[k];
    BigInt bound = boost::multiprecision::numerator(running) * two64 /
                   boost::multiprecision::denominator(running);
    unsigned __int128 value = 0;
    // bound <= 2^64, which fits in 128 bits.
    value = static_cast<unsigned __int128>(static_cast<std::uint64_t>(bound >> 32)) << 32;
    value |= static_cast<std::uint64_t>(bound & 0xFFFFFFFFULL);
    cumulative_.push_back(value);
  }
}

std::size_t CategoricalSampler::pick(std::uint64_t word) const {
  const auto w = static_cast<unsigned __int128>(word);
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), w);
  return static_cast<std::size_t>(it - cumulative_.begin());
}

ElementaryDraw draw_at(const QuotientStructure& q, const CategoricalSampler& bra,
                       const CategoricalSampler& ket, std::uint64_t seed,
                       std::uint64_t index) {
  ElementaryDraw draw;
  draw.bra_label = bra.pick(SplitMix64::at(seed, 2 * index));
  const std::size_t k = ket.pick(SplitMix64::at(seed, 2 * index + 1));
  if (k < q.terrace_labels().size()) draw.terrace = k;
  return draw;
}

std::vector<ElementaryDraw> sample(const QuotientStructure& q, const BelievabilityDist& b,
                                   const ProbabilityDist& p, std::uint64_t seed,
                                   std::size_t n) {
  const CategoricalSampler bra(b.mass());
  const CategoricalSampler ket(ket_masses(q, p));
  std::vector<ElementaryDraw> draws;
  draws.reserve(n);
  for (std::size_t i = 0; i < n; ++i) draws.push_back(draw_at(q, bra, ket, seed, i));
  return draws;
}

CertaintyEstimate estimate_certainty(const QuotientStructure& q,
                                     const std::vector<ElementaryDraw>& draws) {
  if (draws.empty()) throw ValidationError("draws", "cannot estimate from zero draws");
  std::uint64_t occurred = 0;
  for (const auto& draw : draws) {
    if (evaluate_occurrence(q, draw).coevent_occurred) ++occurred;
  }
  return finish(occurred, draws.size());
}

CertaintyEstimate simulate_certainty(const QuotientStructure& q, const BelievabilityDist& b,
                                     const ProbabilityDist& p, std::uint64_t seed,
                                     std::uint64_t n, unsigned streams) {
  if (n == 0) throw ValidationError("n", "cannot estimate from zero draws");
  if (streams == 0) throw ValidationError("streams", "need at least one stream");
  const CategoricalSampler bra(b.mass());
  const CategoricalSampler ket(ket_masses(q, p));

  // Occurrence needs only the drawn terrace's member mask; precompute it.
  std::vector<LabelMask> members;
  for (const auto& tl : q.terrace_labels()) members.push_back(tl.members);
  members.push_back(0);

  std::vector<std::uint64_t> counts(streams, 0);
  auto work = [&](unsigned s) {
    const auto wide = static_cast<unsigned __int128>(n);
    const auto begin = static_cast<std::uint64_t>(wide * s / streams);
    const auto end = static_cast<std::uint64_t>(wide * (s + 1) / streams);
    std::uint64_t local = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      const std::size_t x = bra.pick(SplitMix64::at(seed, 2 * i));
      const std::size_t k = ket.pick(SplitMix64::at(seed, 2 * i + 1));
      local += contains_label(members[k], x) ? 1 : 0;
    }
    counts[s] = local;
  };

  if (streams == 1) {
    work(0);
  } else {
    std::vector<std::thread> workers;
    for (unsigned s = 0; s < streams; ++s) workers.emplace_back(work, s);
    for (auto& w : workers) w.join();
  }
  std::uint64_t occurred = 0;
  for (auto c : counts) occurred += c;
  return finish(occurred, n);
}

}  // namespace coevent
