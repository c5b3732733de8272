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
#include <vector>

#include <gtest/gtest.h>

#include "coevent/errors.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace coevent {
namespace {

using testing::rat;

struct Delicacies : ::testing::Test {
  ExtensionalCoEvent ext = testing::delicacies();
  QuotientStructure q = derive_labelling(ext);
  BelievabilityDist b = BelievabilityDist::from_points(q, ext);
  ProbabilityDist p = ProbabilityDist::from_points(q, ext);
};

TEST_F(Delicacies, Believability) {
  EXPECT_EQ(believability(0b11, q, b), Rational(1));
  EXPECT_EQ(believability(0, q, b), Rational(0));
  EXPECT_EQ(believability(0b01, q, b), rat("3/5"));
  EXPECT_THROW(believability(0b100, q, b), UnknownIdError);
}

TEST_F(Delicacies, ProbabilityOfLabel) {
  EXPECT_EQ(probability_of_label(0, q, p), rat("1/2"));
  EXPECT_EQ(probability_of_label(1, q, p), rat("4/5"));
  EXPECT_THROW(probability_of_label(2, q, p), UnknownIdError);
}

TEST_F(Delicacies, BelievabilityOfTerrace) {
  EXPECT_EQ(believability_of_terrace(0, q, b), rat("3/5"));
  EXPECT_EQ(believability_of_terrace(1, q, b), Rational(1));
  EXPECT_EQ(believability_of_terrace(2, q, b), rat("2/5"));
  EXPECT_THROW(believability_of_terrace(3, q, b), UnknownIdError);
}

TEST_F(Delicacies, CertaintyOfProducts) {
  const IndexSet all{0, 1, 2};
  EXPECT_EQ(certainty(q.all_labels(), all, q, b, p), Rational(1));
  EXPECT_EQ(certainty(0, all, q, b, p), Rational(0));
  EXPECT_EQ(certainty(q.all_labels(), {}, q, b, p), Rational(0));
  EXPECT_EQ(certainty(0b01, q.terrace_labels()[1].terrace, q, b, p), rat("9/50"));
}

TEST_F(Delicacies, CertaintyReportHasBothSumsAndAllCells) {
  const auto r = certainty_of_coevent(q, b, p);
  EXPECT_EQ(r.phi_by_labels, rat("31/50"));
  EXPECT_EQ(r.phi_by_terraces, rat("31/50"));
  EXPECT_EQ(r.phi_by_cells, rat("31/50"));
  EXPECT_TRUE(r.consistent());
  EXPECT_EQ(r.p_of_label, (std::vector<Rational>{rat("0.5"), rat("0.8")}));
  EXPECT_EQ(r.b_of_terrace, (std::vector<Rational>{rat("0.6"), rat("1"), rat("0.4")}));
  const std::vector<std::vector<Rational>> cells{{rat("0.12"), rat("0.18"), rat("0.30")},
                                                 {rat("0.08"), rat("0.12"), rat("0.20")}};
  EXPECT_EQ(r.cell, cells);
  // The two iterated sums, term by term.
  EXPECT_EQ(rat("0.6") * rat("0.5") + rat("0.4") * rat("0.8"), r.phi_by_labels);
  EXPECT_EQ(rat("0.6") * rat("0.2") + rat("1") * rat("0.3") + rat("0.4") * rat("0.5"),
            r.phi_by_terraces);
}

TEST_F(Delicacies, AxiomsPass) {
  const auto report = check_axioms(q, b, p);
  EXPECT_TRUE(report.all_pass());
  EXPECT_EQ(report.checks.size(), 11u);
  EXPECT_EQ(report.find("believability continuity").status, CheckStatus::kVacuous);
  EXPECT_EQ(to_string(CheckStatus::kVacuous), "vacuous (finite)");
  EXPECT_EQ(report.find("certainty normalization").status, CheckStatus::kPass);
  EXPECT_THROW(report.find("no such check"), UnknownIdError);
}

TEST_F(Delicacies, ScaledBelievabilityFailsNormalization) {
  const BelievabilityDist doubled(q, {rat("6/5"), rat("4/5")});
  const auto report = check_axioms(q, doubled, p);
  EXPECT_FALSE(report.all_pass());
  const auto& c = report.find("believability normalization");
  EXPECT_EQ(c.status, CheckStatus::kFail);
  EXPECT_EQ(c.witness, "sum = 2");
  EXPECT_EQ(report.find("believability additivity").status, CheckStatus::kPass);
  EXPECT_EQ(report.find("certainty normalization").status, CheckStatus::kFail);
}

TEST_F(Delicacies, NegativeMassFailsNonnegativity) {
  const ProbabilityDist bad(q, {rat("-1/5"), rat("7/10"), rat("1/2")});
  const auto report = check_axioms(q, b, bad);
  EXPECT_EQ(report.find("probability nonnegativity").status, CheckStatus::kFail);
  EXPECT_NE(report.find("probability nonnegativity").witness.find("p[X1]"), std::string::npos);
  EXPECT_EQ(report.find("probability normalization").status, CheckStatus::kPass);
}

TEST_F(Delicacies, MisshapenDistributionsAreRejected) {
  EXPECT_THROW(BelievabilityDist(q, {Rational(1)}), Error);
  EXPECT_THROW(ProbabilityDist(q, {Rational(1), Rational(0)}), Error);
}

TEST(Measures, OmegaEmptyLabelHasZeroProbability) {
  const auto ext = testing::omega_empty_coevent();
  const auto q = derive_labelling(ext);
  const auto p = ProbabilityDist::from_points(q, ext);
  const auto b = BelievabilityDist::from_points(q, ext);
  EXPECT_EQ(probability_of_label(*q.omega_empty_label(), q, p), Rational(0));
  EXPECT_EQ(p.empty_terrace_mass(), rat("2/5"));
  EXPECT_EQ(b.at(0), rat("3/5"));  // bra-class {a, c}
  // The empty terrace enters neither Fubini sum but does count towards P.
  const auto r = certainty_of_coevent(q, b, p);
  EXPECT_TRUE(r.consistent());
  EXPECT_EQ(r.phi_by_labels, testing::point_certainty(ext));
  EXPECT_EQ(p.total(), Rational(1));
  EXPECT_TRUE(check_axioms(q, b, p).all_pass());
}

TEST(Measures, FullRelationHasCertaintyOne) {
  const auto t = testing::make_triple(testing::constant_coevent(3, 4, true));
  EXPECT_EQ(certainty_of_coevent(t.q, t.b, t.p).phi_by_labels, Rational(1));
}

TEST(Measures, KetEventsMustBeTerraceUnions) {
  const auto t = testing::make_triple(testing::constant_coevent(2, 4, true));
  EXPECT_THROW(probability({0}, t.q, t.p), UnrepresentableEventError);
  EXPECT_THROW(certainty(t.q.all_labels(), {1, 2}, t.q, t.b, t.p), UnrepresentableEventError);
  EXPECT_EQ(probability({0, 1, 2, 3}, t.q, t.p), Rational(1));
  // The point-level overload measures any ket subset.
  EXPECT_EQ(certainty(IndexSet{0, 1}, IndexSet{0}, t.ext), Rational(1, 4));
}

// Both summation orders, the cell sum, and the point-level oracle agree on
// every random triple.
TEST(Measures, FubiniIdentityProperty) {
  testing::Engine rng(201);
  for (int trial = 0; trial < 300; ++trial) {
    const auto t = testing::random_triple(rng, 8, 10);
    const auto r = certainty_of_coevent(t.q, t.b, t.p);
    ASSERT_EQ(r.phi_by_labels, r.phi_by_terraces) << "trial " << trial;
    ASSERT_EQ(r.phi_by_labels, r.phi_by_cells);
    ASSERT_EQ(r.phi_by_labels, testing::point_certainty(t.ext));
    for (std::size_t x = 0; x < t.q.labels().size(); ++x) {
      for (std::size_t k = 0; k < t.q.terrace_labels().size(); ++k) {
        ASSERT_EQ(r.cell[x][k], t.b.at(x) * t.p.at(k));
      }
    }
    EXPECT_TRUE(check_axioms(t.q, t.b, t.p).all_pass());
  }
}

// Phi(<Omega|Omega>) = 1, Phi(<empty|empty>) = 0, Phi(<Omega|empty>) =
// Phi(<empty|Omega>) = 0, Phi(<Omega|L>) = P(L), Phi(<L*|Omega>) = B(L*).
TEST(Measures, SpecialEventTableProperty) {
  testing::Engine rng(202);
  for (int trial = 0; trial < 100; ++trial) {
    const auto t = testing::random_triple(rng, 6, 6);
    const auto& q = t.q;
    const IndexSet all = testing::all_points(q.ket_count());
    EXPECT_EQ(certainty(q.all_labels(), all, q, t.b, t.p), Rational(1));
    EXPECT_EQ(certainty(0, {}, q, t.b, t.p), Rational(0));
    EXPECT_EQ(certainty(q.all_labels(), {}, q, t.b, t.p), Rational(0));
    EXPECT_EQ(certainty(0, all, q, t.b, t.p), Rational(0));
    for (LabelMask m = 0; m <= q.all_labels(); ++m) {
      EXPECT_EQ(certainty(m, all, q, t.b, t.p), believability(m, q, t.b));
    }
    // Every union of terraces, including the empty terrace.
    std::vector<IndexSet> pieces;
    for (const auto& tl : q.terrace_labels()) pieces.push_back(tl.terrace);
    if (q.has_empty_terrace()) pieces.push_back(q.empty_terrace());
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << pieces.size()); ++pick) {
      IndexSet ket;
      for (std::size_t i = 0; i < pieces.size(); ++i) {
        if ((pick >> i) & 1U) ket.insert(ket.end(), pieces[i].begin(), pieces[i].end());
      }
      std::sort(ket.begin(), ket.end());
      EXPECT_EQ(certainty(q.all_labels(), ket, q, t.b, t.p), probability(ket, q, t.p));
      EXPECT_EQ(probability(ket, q, t.p), testing::point_mass(t.ext.ket_points(), ket));
    }
  }
}

// Splitting a ket-point into two copies that share its mass and its column
// leaves the quotient and the certainty unchanged.
TEST(Measures, RefinementInvarianceProperty) {
  testing::Engine rng(203);
  for (int trial = 0; trial < 100; ++trial) {
    const auto ext = testing::random_coevent(rng, testing::uniform_size(rng, 1, 6),
                                             testing::uniform_size(rng, 1, 6));
    const std::size_t split = testing::uniform_size(rng, 0, ext.ket_points().size() - 1);
    auto ket = ext.ket_points();
    const Rational half = ket[split].mass / 2;
    ket[split].mass = half;
    ket.push_back({"copy", half});
    BoolMatrix rel(ext.relation().rows(), ext.relation().cols() + 1);
    for (std::size_t r = 0; r < rel.rows(); ++r) {
      for (std::size_t c = 0; c < ext.relation().cols(); ++c) rel.set(r, c, ext.relation().get(r, c));
      rel.set(r, rel.cols() - 1, ext.relation().get(r, split));
    }
    const auto a = testing::make_triple(ext);
    const auto b = testing::make_triple(ExtensionalCoEvent(ext.bra_points(), ket, rel));
    EXPECT_EQ(a.q.terrace_labels().size(), b.q.terrace_labels().size());
    EXPECT_EQ(a.p.mass(), b.p.mass());
    EXPECT_EQ(certainty_of_coevent(a.q, a.b, a.p).phi_by_labels,
              certainty_of_coevent(b.q, b.b, b.p).phi_by_labels);
  }
}

}  // namespace
}  // namespace coevent
