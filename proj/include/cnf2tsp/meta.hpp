// Sidecar metadata for an emitted instance: everything the certificate
// translators need (formula, numbering, penalty pair, baseline, canonical
// tour) in one versioned JSON document.
#pragma once

#include <string>

#include "cnf2tsp/certificates.hpp"

namespace cnf2tsp {

// Bumped on breaking schema changes; readers accept any minor of the same
// major and reject everything else.
inline constexpr const char* kMetaSchemaVersion = "1.0";

std::string emit_meta(const ReductionArtifact& art);

// Rebuilds the artifact from the stored formula and cross-checks the stored
// numbering, penalty pair, baseline and canonical tour against the rebuild.
// Throws ParseError on malformed JSON, an unsupported schema major, or any
// inconsistency (i.e. a corrupted or hand-edited document).
ReductionArtifact parse_meta(const std::string& json_text);

}  // namespace cnf2tsp
