#pragma once

// JSON forms of scalars, matrices, sets, arrangements, systems and reports,
// wrapped in a versioned document envelope.
//
//   scalar       ["p/q" x 8] in the basis order 1, sqrt2, sqrt3, sqrt6, i,
//                i*sqrt2, i*sqrt3, i*sqrt6
//   matrix       {"rows", "cols", "entries": [scalar, ...]} row-major
//   document     {"kind", "meta": {"field_basis", "version"}, "payload"}

#include <string>

#include "json.hpp"
#include "tss/constructions.hpp"
#include "tss/core.hpp"
#include "tss/report.hpp"
#include "tss/spectral.hpp"

namespace tss {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kFieldBasis = "1,sqrt2,sqrt3,sqrt6,i,i*sqrt2,i*sqrt3,i*sqrt6";

// All *_from_json functions throw ParseError on malformed input.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json witness_to_json(const RealizationWitness& w);
RealizationWitness witness_from_json(const Json& j);
Json tss_to_json(const Tss& t);
Tss tss_from_json(const Json& j);
Json arrangement_to_json(const Arrangement& a);
Arrangement arrangement_from_json(const Json& j);
Json system_to_json(const DecompositionSystem& d);
DecompositionSystem system_from_json(const Json& j);
Json report_to_json(const Report& r);
Report report_from_json(const Json& j);

Json certificate_to_json(const Certificate& c);
Json classification_to_json(const ClassificationResult& c);

enum class DocumentKind { Tss, Arrangement, System, Report };
const char* to_string(DocumentKind k);

struct Document {
  DocumentKind kind = DocumentKind::Report;
  Json payload;
  /// Extra top-level result data (certificates, classifications).
  Json result;
};

Document make_document(const Tss& t);
Document make_document(const Arrangement& a);
Document make_document(const DecompositionSystem& d);
Document make_document(const Report& r);

/// Canonical text: two-space indentation, trailing newline.
std::string emit(const Document& d);
/// Throws ParseError on bad JSON, unknown kinds or versions.
Document parse_document(const std::string& text);

/// Throw KindMismatch when the document holds something else.
Tss expect_tss(const Document& d);
Arrangement expect_arrangement(const Document& d);

}  // namespace tss
