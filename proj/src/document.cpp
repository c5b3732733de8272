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

#include "coevent/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "coevent/errors.hpp"
#include "json.hpp"

namespace coevent {
namespace {

using nlohmann::json;

const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ValidationError(path.empty() ? key : path + "." + key, "missing");
  }
  return obj.at(key);
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

Rational parse_mass(const json& value, const std::string& path) {
  if (value.is_string()) {
    auto r = parse_rational(value.get<std::string>());
    if (!r) {
      throw ValidationError(path, "'" + value.get<std::string>() +
                                      "' is not a decimal or fraction literal");
    }
    return *r;
  }
  if (value.is_number_integer()) return Rational(value.get<long long>());
  throw ValidationError(path, "expected a decimal string such as \"0.6\" or \"3/5\"");
}

std::string parse_id(const json& value, const std::string& path) {
  if (!value.is_string() || value.get<std::string>().empty()) {
    throw ValidationError(path, "expected a nonempty identifier string");
  }
  return value.get<std::string>();
}

std::vector<MassPoint> parse_points(const json& arr, const std::string& path) {
  if (!arr.is_array()) throw ValidationError(path, "expected an array");
  std::vector<MassPoint> points;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = path + "[" + std::to_string(i) + "]";
    points.push_back({parse_id(require(arr[i], "id", where), where + ".id"),
                      parse_mass(require(arr[i], "mass", where), where + ".mass")});
  }
  return points;
}

BoolMatrix parse_relation(const json& arr, std::size_t rows, std::size_t cols,
                          const std::string& path) {
  if (!arr.is_array() || arr.size() != rows) {
    throw ValidationError(path, "expected " + std::to_string(rows) + " rows");
  }
  BoolMatrix rel(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string row_path = path + "[" + std::to_string(r) + "]";
    if (!arr[r].is_array() || arr[r].size() != cols) {
      throw ValidationError(row_path, "expected " + std::to_string(cols) + " cells");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& cell = arr[r][c];
      const std::string cell_path = row_path + "[" + std::to_string(c) + "]";
      if (cell.is_boolean()) {
        rel.set(r, c, cell.get<bool>());
      } else if (cell.is_number_integer() && (cell == 0 || cell == 1)) {
        rel.set(r, c, cell == 1);
      } else {
        throw ValidationError(cell_path, "expected 0 or 1");
      }
    }
  }
  return rel;
}

// Wraps ExtensionalCoEvent construction so its field names carry the
// document path prefix.
template <typename F>
auto with_prefix(const std::string& prefix, F&& f) {
  try {
    return f();
  } catch (const ValidationError& e) {
    std::string msg = e.what();
    const std::string head = e.field() + ": ";
    if (msg.rfind(head, 0) == 0) msg = msg.substr(head.size());
    throw ValidationError(join(prefix, e.field()), msg);
  }
}

struct Parsed {
  DocumentForm form;
  ExtensionalCoEvent coevent;
  // Quotient form: document subset index -> ket-point index (identity).
  std::size_t subset_count = 0;
};

ExtensionalCoEvent parse_extensional(const json& doc) {
  const std::string path = "extensional";
  auto bra = parse_points(require(doc, "bra_points", path), path + ".bra_points");
  auto ket = parse_points(require(doc, "ket_points", path), path + ".ket_points");
  auto rel = parse_relation(require(doc, "relation", path), bra.size(), ket.size(),
                            path + ".relation");
  return with_prefix(path, [&] {
    return ExtensionalCoEvent(std::move(bra), std::move(ket), std::move(rel));
  });
}

ExtensionalCoEvent parse_quotient(const json& doc, std::size_t& subset_count) {
  const std::string path = "quotient";
  const json& labels_json = require(doc, "labels", path);
  const json& subsets_json = require(doc, "subsets", path);
  const json& b_json = require(doc, "believability", path);
  const json& p_json = require(doc, "probability", path);
  if (!labels_json.is_array() || labels_json.empty()) {
    throw ValidationError(path + ".labels", "expected a nonempty array");
  }
  if (!subsets_json.is_array() || subsets_json.empty()) {
    throw ValidationError(path + ".subsets", "expected a nonempty array");
  }
  if (!b_json.is_object()) throw ValidationError(path + ".believability", "expected an object");
  if (!p_json.is_object()) throw ValidationError(path + ".probability", "expected an object");

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < labels_json.size(); ++i) {
    labels.push_back(parse_id(labels_json[i], path + ".labels[" + std::to_string(i) + "]"));
  }
  auto label_pos = [&](const std::string& id, const std::string& where) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == id) return i;
    }
    throw ValidationError(where, "unknown label '" + id + "'");
  };

  subset_count = subsets_json.size();
  BoolMatrix rel(labels.size(), subset_count);
  std::set<std::vector<bool>> seen_subsets;
  for (std::size_t s = 0; s < subset_count; ++s) {
    const std::string where = path + ".subsets[" + std::to_string(s) + "]";
    if (!subsets_json[s].is_array()) throw ValidationError(where, "expected an array of labels");
    std::vector<bool> members(labels.size(), false);
    for (std::size_t k = 0; k < subsets_json[s].size(); ++k) {
      const std::string item = where + "[" + std::to_string(k) + "]";
      const std::size_t x = label_pos(parse_id(subsets_json[s][k], item), item);
      members[x] = true;
      rel.set(x, s, true);
    }
    if (!seen_subsets.insert(members).second) {
      throw ValidationError(where, "duplicate labelling subset");
    }
  }
  for (std::size_t a = 0; a < labels.size(); ++a) {
    for (std::size_t b = a + 1; b < labels.size(); ++b) {
      bool same = true;
      for (std::size_t s = 0; s < subset_count && same; ++s) same = rel.get(a, s) == rel.get(b, s);
      if (same) {
        throw ValidationError(path + ".labels[" + std::to_string(b) + "]",
                              "label '" + labels[b] + "' belongs to exactly the same subsets as '" +
                                  labels[a] + "'");
      }
    }
  }

  std::vector<MassPoint> bra;
  for (const auto& id : labels) {
    const std::string where = path + ".believability." + id;
    if (!b_json.contains(id)) throw ValidationError(where, "missing");
    bra.push_back({id, parse_mass(b_json.at(id), where)});
  }
  if (b_json.size() != labels.size()) {
    for (auto it = b_json.begin(); it != b_json.end(); ++it) {
      label_pos(it.key(), path + ".believability." + it.key());
    }
  }
  std::vector<MassPoint> ket;
  for (std::size_t s = 0; s < subset_count; ++s) {
    const std::string key = std::to_string(s);
    const std::string where = path + ".probability." + key;
    if (!p_json.contains(key)) throw ValidationError(where, "missing");
    ket.push_back({"subset" + key, parse_mass(p_json.at(key), where)});
  }
  if (p_json.size() != subset_count) {
    throw ValidationError(path + ".probability",
                          "keys must be exactly the subset indices 0.." +
                              std::to_string(subset_count - 1));
  }

  return with_prefix(path, [&] {
    try {
      return ExtensionalCoEvent(std::move(bra), std::move(ket), std::move(rel));
    } catch (const ValidationError& e) {
      // Point-side names map back onto the quotient vocabulary.
      std::string field = e.field();
      if (field.rfind("bra_points", 0) == 0) field = "believability";
      if (field.rfind("ket_points", 0) == 0) field = "probability";
      std::string msg = e.what();
      const std::string head = e.field() + ": ";
      if (msg.rfind(head, 0) == 0) msg = msg.substr(head.size());
      throw ValidationError(field, msg);
    }
  });
}

LpSection parse_lp(const json& lp, const Parsed& parsed, const QuotientStructure& q) {
  LpSection out;
  const json& pb = require(lp, "p_breve", "lp");
  const json& bt = require(lp, "b_target", "lp");
  if (!pb.is_object()) throw ValidationError("lp.p_breve", "expected an object");
  if (!bt.is_object()) throw ValidationError("lp.b_target", "expected an object");

  for (auto it = pb.begin(); it != pb.end(); ++it) {
    const std::string where = "lp.p_breve." + it.key();
    try {
      q.label_index(it.key());
    } catch (const UnknownIdError&) {
      throw ValidationError(where, "unknown label");
    }
    out.p_breve[it.key()] = parse_mass(it.value(), where);
  }
  for (const auto& label : q.labels()) {
    if (!out.p_breve.count(label.id)) {
      throw ValidationError("lp.p_breve." + label.id, "missing");
    }
  }

  for (auto it = bt.begin(); it != bt.end(); ++it) {
    const std::string where = "lp.b_target." + it.key();
    std::string terrace_id;
    if (parsed.form == DocumentForm::kQuotient) {
      std::size_t index = 0;
      try {
        std::size_t used = 0;
        index = std::stoul(it.key(), &used);
        if (used != it.key().size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ValidationError(where, "expected a subset index");
      }
      if (index >= parsed.subset_count) throw ValidationError(where, "no such subset");
      auto t = q.terrace_of_ket(index);
      if (!t) throw ValidationError(where, "the empty subset is not a labelling subset");
      terrace_id = q.terrace_labels()[*t].id;
    } else {
      try {
        q.terrace_index(it.key());
      } catch (const UnknownIdError&) {
        throw ValidationError(where, "unknown terrace-label");
      }
      terrace_id = it.key();
    }
    out.b_target[terrace_id] = parse_mass(it.value(), where);
  }
  for (const auto& tl : q.terrace_labels()) {
    if (!out.b_target.count(tl.id)) {
      throw ValidationError("lp.b_target", "missing entry for terrace-label " + tl.id);
    }
  }
  return out;
}

json rational_json(const Rational& r) { return to_fraction_string(r); }

}  // namespace

LoadedDocument parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError("document", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("document", "expected a JSON object");
  const json& version = require(doc, "version", "");
  if (!version.is_number_integer() || version.get<long long>() != kDocumentVersion) {
    throw ValidationError("version", "unsupported version (expected " +
                                         std::to_string(kDocumentVersion) + ")");
  }
  const bool has_ext = doc.contains("extensional");
  const bool has_quo = doc.contains("quotient");
  if (has_ext == has_quo) {
    throw ValidationError("document",
                          "exactly one of \"extensional\" and \"quotient\" is required");
  }

  std::size_t subset_count = 0;
  Parsed parsed{has_ext ? DocumentForm::kExtensional : DocumentForm::kQuotient,
                has_ext ? parse_extensional(doc.at("extensional"))
                        : parse_quotient(doc.at("quotient"), subset_count),
                subset_count};

  QuotientStructure q = with_prefix("relation", [&] { return derive_labelling(parsed.coevent); });
  BelievabilityDist b = BelievabilityDist::from_points(q, parsed.coevent);
  ProbabilityDist p = ProbabilityDist::from_points(q, parsed.coevent);

  std::optional<LpSection> lp;
  if (doc.contains("lp")) lp = parse_lp(doc.at("lp"), parsed, q);

  return LoadedDocument{parsed.form, std::move(parsed.coevent), std::move(q), std::move(b),
                        std::move(p), std::move(lp)};
}

LoadedDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("input", "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

std::string to_quotient_document(const LoadedDocument& doc) {
  const auto& q = doc.quotient;
  json labels = json::array();
  json believability = json::object();
  for (std::size_t x = 0; x < q.labels().size(); ++x) {
    labels.push_back(q.labels()[x].id);
    believability[q.labels()[x].id] = rational_json(doc.believability.at(x));
  }
  json subsets = json::array();
  json probability = json::object();
  for (std::size_t t = 0; t < q.terrace_labels().size(); ++t) {
    subsets.push_back(q.ids_of(q.terrace_labels()[t].members));
    probability[std::to_string(t)] = rational_json(doc.probability.at(t));
  }
  if (q.has_empty_terrace()) {
    probability[std::to_string(subsets.size())] =
        rational_json(doc.probability.empty_terrace_mass());
    subsets.push_back(json::array());
  }

  json out = {{"version", kDocumentVersion},
              {"quotient",
               {{"labels", labels},
                {"subsets", subsets},
                {"believability", believability},
                {"probability", probability}}}};
  if (doc.lp) {
    json p_breve = json::object();
    for (const auto& [id, v] : doc.lp->p_breve) p_breve[id] = rational_json(v);
    json b_target = json::object();
    for (std::size_t t = 0; t < q.terrace_labels().size(); ++t) {
      b_target[std::to_string(t)] = rational_json(doc.lp->b_target.at(q.terrace_labels()[t].id));
    }
    out["lp"] = {{"p_breve", p_breve}, {"b_target", b_target}};
  }
  return out.dump(2) + "\n";
}

}  // namespace coevent
