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

#include "commands.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coevent/document.hpp"
#include "coevent/errors.hpp"
#include "coevent/induced_measures.hpp"
#include "coevent/labelled_universe.hpp"
#include "coevent/lp_duality.hpp"
#include "coevent/measures.hpp"
#include "coevent/occurrence_sim.hpp"
#include "json.hpp"

namespace coevent::cli {
namespace {

using nlohmann::json;

// Upper bound on worker threads; more than this buys nothing at CLI scale.
constexpr unsigned kMaxStreams = 256;

struct Options {
  std::string input;
  bool json = false;
  std::uint64_t seed = 0;
  std::uint64_t n = 1000000;
  unsigned streams = 1;
  std::string side = "both";
};

// ---------------------------------------------------------------------------
// Rendering helpers

std::string show(const Rational& r) { return to_display_string(r); }

json exact(const Rational& r) { return to_fraction_string(r); }

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string braces(const std::vector<std::string>& items) {
  std::string s = "{";
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + items[i];
  return s + "}";
}

std::vector<std::string> point_ids(const IndexSet& set, const std::vector<MassPoint>& points) {
  std::vector<std::string> ids;
  for (std::size_t i : set) ids.push_back(points[i].id);
  return ids;
}

// Left-aligned columns separated by two spaces, every line indented.
class Table {
 public:
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& out, const std::string& indent = "  ") const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_) {
      if (width.size() < row.size()) width.resize(row.size(), 0);
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    for (const auto& row : rows_) {
      std::string line = indent;
      for (std::size_t c = 0; c < row.size(); ++c) {
        line += row[c];
        if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------
// analyze

int cmd_analyze(const LoadedDocument& doc, const Options& opt, std::ostream& out) {
  const auto& q = doc.quotient;
  const auto& ext = doc.coevent;
  const SpecialKind kind = classify_special(ext);

  if (opt.json) {
    // The document part ("version", "quotient", "lp") is a loadable
    // quotient-form document; "structure" and "points" are the report.
    json j = json::parse(to_quotient_document(doc));
    json labels = json::array();
    for (const auto& l : q.labels()) {
      labels.push_back({{"id", l.id}, {"omega_empty", l.is_omega_empty}});
    }
    json subsets = json::array();
    json incidence = json::array();
    for (const auto& tl : q.terrace_labels()) {
      subsets.push_back({{"id", tl.id}, {"members", q.ids_of(tl.members)}});
    }
    for (std::size_t x = 0; x < q.labels().size(); ++x) {
      json row = json::array();
      for (std::size_t t = 0; t < q.terrace_labels().size(); ++t) row.push_back(q.incidence(x, t) ? 1 : 0);
      incidence.push_back(row);
    }
    j["structure"] = {{"kind", to_string(kind)},
                      {"labels", labels},
                      {"subsets", subsets},
                      {"incidence", incidence},
                      {"has_empty_terrace", q.has_empty_terrace()}};
    json bra_classes = json::object();
    json ket_events = json::object();
    for (const auto& l : q.labels()) {
      bra_classes[l.id] = point_ids(l.bra_class, ext.bra_points());
      ket_events[l.id] = point_ids(l.ket_event, ext.ket_points());
    }
    json terraces = json::object();
    for (const auto& tl : q.terrace_labels()) terraces[tl.id] = point_ids(tl.terrace, ext.ket_points());
    j["points"] = {{"bra_classes", bra_classes},
                   {"ket_events", ket_events},
                   {"terraces", terraces},
                   {"empty_terrace", point_ids(q.empty_terrace(), ext.ket_points())}};
    emit_json(out, j);
    return kExitOk;
  }

  out << "co~event: " << ext.bra_points().size() << " bra-points, " << ext.ket_points().size()
      << " ket-points, " << ext.relation().count() << " of "
      << ext.bra_points().size() * ext.ket_points().size() << " cells in R\n";
  out << "kind: " << to_string(kind) << "\n\n";

  out << "labels (" << q.labels().size() << ")\n";
  Table labels;
  labels.add({"label", "bra-class", "ket-event", ""});
  for (const auto& l : q.labels()) {
    labels.add({l.id, braces(point_ids(l.bra_class, ext.bra_points())),
                braces(point_ids(l.ket_event, ext.ket_points())),
                l.is_omega_empty ? "Omega-empty" : ""});
  }
  labels.print(out);

  out << "\nlabelling subsets (" << q.terrace_labels().size() << ")\n";
  Table subsets;
  subsets.add({"subset", "members", "terrace"});
  for (const auto& tl : q.terrace_labels()) {
    subsets.add({tl.id, braces(q.ids_of(tl.members)), braces(point_ids(tl.terrace, ext.ket_points()))});
  }
  subsets.print(out);
  out << "empty terrace: "
      << (q.has_empty_terrace() ? braces(point_ids(q.empty_terrace(), ext.ket_points())) : "none")
      << "\n\nincidence 1_X(x)\n";
  Table grid;
  std::vector<std::string> head{""};
  for (const auto& tl : q.terrace_labels()) head.push_back(tl.id);
  grid.add(head);
  for (std::size_t x = 0; x < q.labels().size(); ++x) {
    std::vector<std::string> row{q.labels()[x].id};
    for (std::size_t t = 0; t < q.terrace_labels().size(); ++t) row.push_back(q.incidence(x, t) ? "1" : "0");
    grid.add(row);
  }
  grid.print(out);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// certify

int cmd_certify(const LoadedDocument& doc, const Options& opt, std::ostream& out,
                std::ostream& err) {
  const auto& q = doc.quotient;
  const auto& b = doc.believability;
  const auto& p = doc.probability;
  const CertaintyReport report = certainty_of_coevent(q, b, p);
  const ComplianceReport axioms = check_axioms(q, b, p);

  if (opt.json) {
    json labels = json::array();
    for (std::size_t x = 0; x < q.labels().size(); ++x) {
      labels.push_back({{"id", q.labels()[x].id}, {"b", exact(b.at(x))}, {"p", exact(report.p_of_label[x])}});
    }
    json terraces = json::array();
    json cells = json::array();
    for (std::size_t t = 0; t < q.terrace_labels().size(); ++t) {
      const auto& tl = q.terrace_labels()[t];
      terraces.push_back({{"id", tl.id},
                          {"members", q.ids_of(tl.members)},
                          {"b", exact(report.b_of_terrace[t])},
                          {"p", exact(p.at(t))}});
    }
    for (std::size_t x = 0; x < q.labels().size(); ++x) {
      for (std::size_t t = 0; t < q.terrace_labels().size(); ++t) {
        cells.push_back({{"label", q.labels()[x].id},
                         {"terrace", q.terrace_labels()[t].id},
                         {"value", exact(report.cell[x][t])},
                         {"in_relation", q.incidence(x, t)}});
      }
    }
    json checks = json::array();
    for (const auto& c : axioms.checks) {
      checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"witness", c.witness}});
    }
    emit_json(out, {{"labels", labels},
                    {"terrace_labels", terraces},
                    {"empty_terrace_p", exact(p.empty_terrace_mass())},
                    {"cells", cells},
                    {"phi",
                     {{"by_labels", exact(report.phi_by_labels)},
                      {"by_terraces", exact(report.phi_by_terraces)},
                      {"by_cells", exact(report.phi_by_cells)}}},
                    {"consistent", report.consistent()},
                    {"axioms", checks}});
  } else {
    out << "labels\n";
    Table labels;
    labels.add({"x", "b_x", "p_x"});
    for (std::size_t x = 0; x < q.labels().size(); ++x) {
      labels.add({q.labels()[x].id, show(b.at(x)), show(report.p_of_label[x])});
    }
    labels.print(out);

    out << "\nlabelling subsets\n";
    Table terraces;
    terraces.add({"X", "members", "b(X)", "p(X)"});
    for (std::size_t t = 0; t < q.terrace_labels().size(); ++t) {
      const auto& tl = q.terrace_labels()[t];
      terraces.add({tl.id, braces(q.ids_of(tl.members)), show(report.b_of_terrace[t]), show(p.at(t))});
    }
    if (q.has_empty_terrace()) terraces.add({"(empty)", "{}", "0", show(p.empty_terrace_mass())});
    terraces.print(out);

    out << "\ncell certainties phi_x(X) = b_x p(X)   (* marks cells in R)\n";
    Table grid;
    std::vector<std::string> head{""};
    for (const auto& tl : q.terrace_labels()) head.push_back(tl.id);
    grid.add(head);
    for (std::size_t x = 0; x < q.labels().size(); ++x) {
      std::vector<std::string> row{q.labels()[x].id};
      for (std::size_t t = 0; t < q.terrace_labels().size(); ++t) {
        row.push_back(show(report.cell[x][t]) + (q.incidence(x, t) ? " *" : ""));
      }
      grid.add(row);
    }
    grid.print(out);

    out << '\n';
    Table phi;
    phi.add({"Phi(R) by labels", "sum_x b_x p_x", "=", show(report.phi_by_labels)});
    phi.add({"Phi(R) by terraces", "sum_X b(X) p(X)", "=", show(report.phi_by_terraces)});
    phi.add({"Phi(R) by cells", "sum over R of phi_x(X)", "=", show(report.phi_by_cells)});
    phi.print(out, "");

    out << "\naxioms\n";
    Table checks;
    for (const auto& c : axioms.checks) {
      checks.add({c.name, to_string(c.status), c.witness.empty() ? "" : "(" + c.witness + ")"});
    }
    checks.print(out);
  }

  if (!report.consistent()) {
    err << "internal error: the certainty sums disagree\n";
    return kExitInternal;
  }
  if (!axioms.all_pass()) {
    err << "internal error: validated measures failed an axiom check\n";
    return kExitInternal;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// simulate

int cmd_simulate(const LoadedDocument& doc, const Options& opt, std::ostream& out) {
  if (opt.streams > kMaxStreams) {
    throw ValidationError("streams", "at most " + std::to_string(kMaxStreams) + " streams");
  }
  const auto& q = doc.quotient;
  const CertaintyEstimate est =
      simulate_certainty(q, doc.believability, doc.probability, opt.seed, opt.n, opt.streams);
  const Rational phi = certainty_of_coevent(q, doc.believability, doc.probability).phi_by_labels;
  const double diff = est.estimate - to_double(phi);
  std::optional<double> deviation;
  if (est.standard_error > 0) deviation = std::fabs(diff) / est.standard_error;

  // The stream count is deliberately absent: it never changes the result.
  if (opt.json) {
    json j = {{"seed", opt.seed},
              {"draws", est.draws},
              {"occurred", est.count_occurred},
              {"estimate", fixed(est.estimate, 9)},
              {"standard_error", fixed(est.standard_error, 9)},
              {"exact", exact(phi)}};
    j["deviation_in_standard_errors"] = deviation ? json(fixed(*deviation, 3)) : json(nullptr);
    emit_json(out, j);
    return kExitOk;
  }
  Table t;
  t.add({"seed", std::to_string(opt.seed)});
  t.add({"draws", std::to_string(est.draws)});
  t.add({"occurred", std::to_string(est.count_occurred)});
  t.add({"estimate", fixed(est.estimate, 9)});
  t.add({"standard error", fixed(est.standard_error, 9)});
  t.add({"exact Phi(R)", show(phi)});
  t.add({"deviation", deviation ? fixed(*deviation, 3) + " standard errors"
                                : (diff == 0 ? "none (estimate is exact)" : "undefined (zero variance)")});
  t.print(out, "");
  return kExitOk;
}

// ---------------------------------------------------------------------------
// lp

std::string linear_expression(const std::vector<Rational>& coef,
                              const std::vector<std::string>& keys) {
  std::string s;
  for (std::size_t j = 0; j < coef.size(); ++j) {
    if (coef[j] == 0) continue;
    const bool negative = coef[j] < 0;
    const Rational mag = negative ? Rational(-coef[j]) : coef[j];
    if (s.empty()) {
      s += negative ? "-" : "";
    } else {
      s += negative ? " - " : " + ";
    }
    if (mag != 1) s += to_fraction_string(mag) + " ";
    s += keys[j];
  }
  return s.empty() ? "0" : s;
}

std::string relation_symbol(RowKind kind) {
  switch (kind) {
    case RowKind::kLessEqual: return "<=";
    case RowKind::kGreaterEqual: return ">=";
    case RowKind::kEqual: return "=";
  }
  return "?";
}

std::vector<std::string> row_names(const LinearProgram& lp) {
  std::vector<std::string> names;
  for (const auto& r : lp.rows) names.push_back(r.name);
  return names;
}

json lp_json(const LinearProgram& lp, const SimplexSolution& sol) {
  json rows = json::array();
  for (const auto& r : lp.rows) {
    json coef = json::array();
    for (const auto& c : r.coefficients) coef.push_back(exact(c));
    rows.push_back({{"name", r.name}, {"coefficients", coef}, {"kind", relation_symbol(r.kind)},
                    {"rhs", exact(r.rhs)}});
  }
  json objective = json::array();
  for (const auto& c : lp.objective) objective.push_back(exact(c));
  json j = {{"sense", to_string(lp.sense)},
            {"variables", lp.variable_keys},
            {"objective", objective},
            {"rows", rows},
            {"status", to_string(sol.status)}};
  auto keyed = [](const std::vector<std::string>& keys, const std::vector<Rational>& values) {
    json m = json::object();
    for (std::size_t i = 0; i < keys.size() && i < values.size(); ++i) m[keys[i]] = exact(values[i]);
    return m;
  };
  switch (sol.status) {
    case SolveStatus::kOptimal:
      j["value"] = exact(sol.value);
      j["point"] = keyed(lp.variable_keys, sol.point);
      j["multipliers"] = keyed(row_names(lp), sol.multipliers);
      j["certificate_verified"] = verify_optimality(lp, sol);
      break;
    case SolveStatus::kInfeasible:
      j["farkas"] = keyed(row_names(lp), sol.multipliers);
      j["certificate_verified"] = verify_infeasibility(lp, sol.multipliers);
      break;
    case SolveStatus::kUnbounded:
      j["point"] = keyed(lp.variable_keys, sol.point);
      j["ray"] = keyed(lp.variable_keys, sol.ray);
      j["certificate_verified"] = verify_unboundedness(lp, sol);
      break;
  }
  return j;
}

void print_lp(std::ostream& out, const std::string& title, const LinearProgram& lp,
              const SimplexSolution& sol) {
  out << title << ": " << to_string(lp.sense) << "  "
      << linear_expression(lp.objective, lp.variable_keys) << "\n";
  out << "subject to\n";
  Table rows;
  for (const auto& r : lp.rows) {
    rows.add({r.name + ":", linear_expression(r.coefficients, lp.variable_keys),
              relation_symbol(r.kind), to_fraction_string(r.rhs)});
  }
  rows.print(out, "    ");
  out << "    all variables >= 0\n";
  out << "status: " << to_string(sol.status) << "\n";

  auto list = [&](const std::string& name, const std::vector<std::string>& keys,
                  const std::vector<Rational>& values) {
    out << name << "\n";
    Table t;
    for (std::size_t i = 0; i < keys.size() && i < values.size(); ++i) {
      t.add({keys[i], "=", show(values[i])});
    }
    t.print(out, "    ");
  };
  switch (sol.status) {
    case SolveStatus::kOptimal:
      out << "value: " << show(sol.value) << "\n";
      list("point", lp.variable_keys, sol.point);
      list("row multipliers", row_names(lp), sol.multipliers);
      out << "optimality certificate verified: " << (verify_optimality(lp, sol) ? "yes" : "no") << "\n";
      break;
    case SolveStatus::kInfeasible:
      list("Farkas multipliers", row_names(lp), sol.multipliers);
      out << "infeasibility certificate verified: "
          << (verify_infeasibility(lp, sol.multipliers) ? "yes" : "no") << "\n";
      break;
    case SolveStatus::kUnbounded:
      list("feasible point", lp.variable_keys, sol.point);
      list("improving ray", lp.variable_keys, sol.ray);
      out << "unboundedness certificate verified: "
          << (verify_unboundedness(lp, sol) ? "yes" : "no") << "\n";
      break;
  }
}

int cmd_lp(const LoadedDocument& doc, const Options& opt, std::ostream& out) {
  const auto& q = doc.quotient;
  const bool from_document = doc.lp.has_value();
  const LabelCoefficients p_breve =
      from_document ? doc.lp->p_breve : derived_p_breve(q, doc.probability);
  const TerraceCoefficients b_target =
      from_document ? doc.lp->b_target : derived_b_target(q, doc.believability);
  const Rational phi =
      certainty_of_coevent(q, doc.believability, doc.probability).phi_by_labels;

  const bool run_primal = opt.side != "dual";
  const bool run_dual = opt.side != "primal";
  std::optional<LinearProgram> primal_lp, dual_lp;
  std::optional<SimplexSolution> primal, dual;
  if (run_primal) {
    primal_lp = build_primal(q, p_breve, b_target);
    primal = solve(*primal_lp);
  }
  if (run_dual) {
    dual_lp = build_dual(q, b_target, p_breve);
    dual = solve(*dual_lp);
  }
  std::optional<DualityReport> gap;
  if (primal && dual) gap = duality_check(*primal, *dual, phi);

  const std::string source = from_document ? "document lp section" : "derived from the measures";
  if (opt.json) {
    json j = {{"coefficients", source}, {"phi", exact(phi)}};
    if (primal) j["primal"] = lp_json(*primal_lp, *primal);
    if (dual) j["dual"] = lp_json(*dual_lp, *dual);
    if (gap) {
      json g = {{"defined", gap->defined}, {"note", gap->note}};
      if (gap->defined) {
        g["gap"] = exact(gap->gap);
        g["primal_value"] = exact(gap->primal_value);
        g["dual_value"] = exact(gap->dual_value);
      }
      if (gap->matches_certainty) g["matches_phi"] = *gap->matches_certainty;
      j["duality"] = g;
    }
    emit_json(out, j);
  } else {
    out << "coefficients: " << source << "\n";
    bool first = true;
    if (primal) {
      print_lp(out, "primal", *primal_lp, *primal);
      first = false;
    }
    if (dual) {
      if (!first) out << '\n';
      print_lp(out, "dual", *dual_lp, *dual);
    }
    if (gap) {
      out << '\n';
      if (gap->defined) {
        out << "duality gap: " << show(gap->gap) << "  (primal " << show(gap->primal_value)
            << ", dual " << show(gap->dual_value) << ")\n";
        if (gap->matches_certainty) {
          out << (*gap->matches_certainty ? "both optima equal Phi(R) = "
                                          : "optima differ from Phi(R) = ")
              << show(phi) << "\n";
        }
      } else {
        out << gap->note << "\n";
      }
    }
  }

  auto has = [&](SolveStatus s) {
    return (primal && primal->status == s) || (dual && dual->status == s);
  };
  if (has(SolveStatus::kInfeasible)) return kExitInfeasible;
  if (has(SolveStatus::kUnbounded)) return kExitUnbounded;
  return kExitOk;
}

// ---------------------------------------------------------------------------
// induce

json induced_json(const InducedValuation& v, const QuotientStructure& q) {
  json labels = json::object();
  json terraces = json::object();
  for (std::size_t x = 0; x < q.labels().size(); ++x) labels[q.labels()[x].id] = exact(v.on_labels[x]);
  for (std::size_t t = 0; t < q.terrace_labels().size(); ++t) {
    terraces[q.terrace_labels()[t].id] = exact(v.on_terrace_labels[t]);
  }
  json witnesses = json::array();
  for (const auto& w : nonadditivity_witnesses(v, q)) {
    witnesses.push_back({{"key", w.key}, {"whole", exact(w.whole)}, {"parts", exact(w.parts)}});
  }
  return {{"side", to_string(v.side)},
          {"on_labels", labels},
          {"on_terrace_labels", terraces},
          {"witnesses", witnesses}};
}

void print_induced(std::ostream& out, const InducedValuation& v, const QuotientStructure& q) {
  const bool bra = v.side == InducedSide::kProbabilityOnBra;
  const std::string fn = bra ? "P'" : "B'";
  out << to_string(v.side) << "\n";
  Table t;
  for (std::size_t x = 0; x < q.labels().size(); ++x) {
    const auto& id = q.labels()[x].id;
    t.add({fn + (bra ? "(<" + id + "|)" : "(|" + id + ">)"), "=", show(v.on_labels[x])});
  }
  for (std::size_t tl = 0; tl < q.terrace_labels().size(); ++tl) {
    const auto& id = q.terrace_labels()[tl].id;
    t.add({fn + (bra ? "(<Ter_" + id + "|)" : "(|ter " + id + ">)"), "=",
           show(v.on_terrace_labels[tl])});
  }
  t.print(out);
  const auto witnesses = nonadditivity_witnesses(v, q);
  if (witnesses.empty()) {
    out << "no witnesses: the induced valuation is additive here\n";
    return;
  }
  out << "non-additivity witnesses (" << witnesses.size() << ")\n";
  Table w;
  for (const auto& wit : witnesses) {
    if (bra) {
      w.add({wit.key + ":", fn + "(<Ter_" + wit.key + "|) = " + show(wit.whole),
             "but sum over x in " + wit.key + " of " + fn + "(<x|) = " + show(wit.parts)});
    } else {
      w.add({wit.key + ":", fn + "(|" + wit.key + ">) = " + show(wit.whole),
             "but sum over X containing " + wit.key + " of " + fn + "(|ter X>) = " + show(wit.parts)});
    }
  }
  w.print(out);
}

int cmd_induce(const LoadedDocument& doc, const Options& opt, std::ostream& out) {
  const auto& q = doc.quotient;
  std::vector<InducedValuation> sides;
  if (opt.side != "ket") sides.push_back(induce_probability_on_bra(q, doc.probability));
  if (opt.side != "bra") sides.push_back(induce_believability_on_ket(q, doc.believability));

  if (opt.json) {
    json j = json::object();
    for (const auto& v : sides) {
      j[v.side == InducedSide::kProbabilityOnBra ? "bra" : "ket"] = induced_json(v, q);
    }
    emit_json(out, j);
    return kExitOk;
  }
  for (std::size_t i = 0; i < sides.size(); ++i) {
    if (i) out << '\n';
    print_induced(out, sides[i], q);
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite co~event analysis: quotient structure, exact certainty, LPs", "coevent"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", opt.input, "co~event document (JSON)")->required();
    sub->add_flag("--json", opt.json, "emit JSON with sorted keys");
  };
  CLI::App* analyze = app.add_subcommand("analyze", "labels, labelling subsets, terraces, incidence");
  CLI::App* certify = app.add_subcommand("certify", "measures, cell certainties, Phi(R), axiom checks");
  CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of Phi(R)");
  CLI::App* lp = app.add_subcommand("lp", "solve the primal and/or dual linear program");
  CLI::App* induce = app.add_subcommand("induce", "induced set functions and non-additivity witnesses");
  for (CLI::App* sub : {analyze, certify, simulate, lp, induce}) add_common(sub);

  simulate->add_option("--seed", opt.seed, "64-bit seed")->capture_default_str();
  simulate->add_option("--n", opt.n, "number of draws")->capture_default_str();
  simulate->add_option("--streams", opt.streams, "worker threads (result does not depend on it)")
      ->capture_default_str();
  lp->add_option("--side", opt.side, "which problem to solve")
      ->check(CLI::IsMember({"primal", "dual", "both"}))
      ->capture_default_str();
  induce->add_option("--side", opt.side, "bra: P' on bra-events, ket: B' on ket-events")
      ->check(CLI::IsMember({"bra", "ket", "both"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    const LoadedDocument doc = load_document(opt.input);
    if (analyze->parsed()) return cmd_analyze(doc, opt, out);
    if (certify->parsed()) return cmd_certify(doc, opt, out, err);
    if (simulate->parsed()) return cmd_simulate(doc, opt, out);
    if (lp->parsed()) return cmd_lp(doc, opt, out);
    return cmd_induce(doc, opt, out);
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const UnknownIdError& e) {
    err << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const UnrepresentableEventError& e) {
    err << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const InconsistentInputError& e) {
    err << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace coevent::cli
