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

// Co~event documents. See docs/document-format.md for the schema.

#ifndef COEVENT_DOCUMENT_HPP_
#define COEVENT_DOCUMENT_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "coevent/labelled_universe.hpp"
#include "coevent/lp_duality.hpp"
#include "coevent/measures.hpp"

namespace coevent {

inline constexpr int kDocumentVersion = 1;

enum class DocumentForm { kExtensional, kQuotient };

struct LpSection {
  LabelCoefficients p_breve;
  TerraceCoefficients b_target;  // keyed by canonical terrace-label id
};

// Everything a command needs, derived once. A quotient-form document is
// expanded to one bra-point per label and one ket-point per subset, so both
// forms share the same derivation path.
struct LoadedDocument {
  DocumentForm form;
  ExtensionalCoEvent coevent;
  QuotientStructure quotient;
  BelievabilityDist believability;
  ProbabilityDist probability;
  std::optional<LpSection> lp;
};

// Throws ValidationError with a field path such as "quotient.believability.x2"
// for anything that does not match the schema or violates an invariant.
LoadedDocument parse_document(std::string_view text);
LoadedDocument load_document(const std::string& path);

// Quotient-form document text for `doc`, in canonical order. Loading the
// result reproduces the same quotient structure and measures.
std::string to_quotient_document(const LoadedDocument& doc);

}  // namespace coevent

#endif  // COEVENT_DOCUMENT_HPP_
