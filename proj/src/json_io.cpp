#include "tss/json_io.hpp"

#include <stdexcept>

#include "tss/errors.hpp"

namespace tss {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Index count_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(std::string("field \"") + key + "\" must be a nonnegative integer");
  }
  return static_cast<Index>(v.get<long long>());
}

const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw ParseError(std::string("field \"") + key + "\" must be an array");
  return v;
}

std::vector<Matrix> matrices_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of matrices");
  std::vector<Matrix> out;
  for (const auto& m : j) out.push_back(matrix_from_json(m));
  return out;
}

Json matrices_to_json(const std::vector<Matrix>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(matrix_to_json(m));
  return out;
}

Json scalars_to_json(const std::vector<Scalar>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(scalar_to_json(s));
  return out;
}

std::vector<Scalar> scalars_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of scalars");
  std::vector<Scalar> out;
  for (const auto& s : j) out.push_back(scalar_from_json(s));
  return out;
}

Rational rational_from_string(const std::string& s) {
  Rational q;
  try {
    q = Rational(s, 10);
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational: \"" + s + "\"");
  }
  if (sgn(q.get_den()) == 0) throw ParseError("zero denominator: \"" + s + "\"");
  q.canonicalize();
  return q;
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
  Json out = Json::array();
  for (int j = 0; j < Scalar::kDegree; ++j) out.push_back(s.coord(j).get_str());
  return out;
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<long long>()));
  if (!j.is_array() || j.size() != static_cast<std::size_t>(Scalar::kDegree)) {
    throw ParseError("a scalar is an array of 8 \"p/q\" strings");
  }
  Scalar::Coords c{};
  for (int k = 0; k < Scalar::kDegree; ++k) {
    const Json& e = j[static_cast<std::size_t>(k)];
    if (!e.is_string()) throw ParseError("scalar coordinates must be strings");
    c[k] = rational_from_string(e.get<std::string>());
  }
  return Scalar(std::move(c));
}

Json matrix_to_json(const Matrix& m) {
  Json entries = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) entries.push_back(scalar_to_json(m(r, c)));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const Json& j) {
  const Index rows = count_field(j, "rows"), cols = count_field(j, "cols");
  const Json& entries = array_field(j, "entries");
  if (entries.size() != static_cast<std::size_t>(rows * cols)) {
    throw ParseError("matrix has " + std::to_string(entries.size()) + " entries, expected " +
                     std::to_string(rows * cols));
  }
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) m(r, c) = scalar_from_json(entries[static_cast<std::size_t>(r * cols + c)]);
  }
  return m;
}

Json witness_to_json(const RealizationWitness& w) {
  return Json{{"transpositions", matrices_to_json(w.transpositions)}};
}

RealizationWitness witness_from_json(const Json& j) {
  return RealizationWitness{matrices_from_json(field(j, "transpositions"))};
}

Json tss_to_json(const Tss& t) {
  Json out{{"n", t.n}, {"k", t.k}, {"elements", matrices_to_json(t.elements)}};
  if (t.witness) out["witness"] = witness_to_json(*t.witness);
  if (!t.parameters.empty()) out["parameters"] = scalars_to_json(t.parameters);
  return out;
}

Tss tss_from_json(const Json& j) {
  const Index n = count_field(j, "n"), k = count_field(j, "k");
  auto elements = matrices_from_json(field(j, "elements"));
  std::optional<RealizationWitness> w;
  if (j.contains("witness") && !j.at("witness").is_null()) w = witness_from_json(j.at("witness"));
  std::vector<Scalar> params;
  if (j.contains("parameters")) params = scalars_from_json(j.at("parameters"));
  if (static_cast<Index>(elements.size()) != k) throw ParseError("\"k\" does not match the element count");
  Tss t;
  try {
    t = make_tss(std::move(elements), std::move(w), std::move(params));
  } catch (const ShapeMismatch& e) {
    throw ParseError(e.what());
  }
  if (t.n != n && k > 0) throw ParseError("\"n\" does not match the element size");
  t.n = n;
  return t;
}

Json arrangement_to_json(const Arrangement& a) {
  Json planes = Json::array();
  for (const auto& p : a.planes) planes.push_back(matrix_to_json(p.basis()));
  Json out{{"n", a.n}, {"d", a.d}, {"k", a.k}, {"planes", std::move(planes)}};
  if (a.witness) out["witness"] = witness_to_json(*a.witness);
  out["strong"] = a.strong.has_value();
  if (a.strong) {
    out["strong_witness"] = Json{{"representatives", matrices_to_json(a.strong->representatives)},
                                 {"transpositions", matrices_to_json(a.strong->transpositions)}};
  }
  return out;
}

Arrangement arrangement_from_json(const Json& j) {
  const Index n = count_field(j, "n"), d = count_field(j, "d"), k = count_field(j, "k");
  std::vector<Subspace> planes;
  for (const auto& m : matrices_from_json(field(j, "planes"))) {
    if (m.rows() != n) throw ParseError("plane basis has the wrong number of rows");
    planes.push_back(Subspace::span(m));
  }
  if (static_cast<Index>(planes.size()) != k) throw ParseError("\"k\" does not match the plane count");
  std::optional<RealizationWitness> w;
  if (j.contains("witness") && !j.at("witness").is_null()) w = witness_from_json(j.at("witness"));
  std::optional<StrongWitness> strong;
  if (j.contains("strong_witness") && !j.at("strong_witness").is_null()) {
    const Json& s = j.at("strong_witness");
    strong = StrongWitness{matrices_from_json(field(s, "representatives")),
                           matrices_from_json(field(s, "transpositions"))};
  }
  Arrangement a;
  try {
    a = make_arrangement(std::move(planes), std::move(w), std::move(strong));
  } catch (const ShapeMismatch& e) {
    throw ParseError(e.what());
  }
  if (k > 0 && a.d != d) throw ParseError("\"d\" does not match the plane dimension");
  a.n = n;
  a.d = d;
  return a;
}

Json system_to_json(const DecompositionSystem& d) {
  Json rows = Json::array();
  for (const auto& row : d.subspaces) {
    Json r = Json::array();
    for (const auto& s : row) r.push_back(matrix_to_json(s.basis()));
    rows.push_back(std::move(r));
  }
  return Json{{"n", d.n}, {"k", d.k}, {"parts", d.parts}, {"subspaces", std::move(rows)},
              {"witness", witness_to_json(d.witness)}};
}

DecompositionSystem system_from_json(const Json& j) {
  DecompositionSystem d;
  d.n = count_field(j, "n");
  d.k = count_field(j, "k");
  d.parts = count_field(j, "parts");
  for (const auto& row : array_field(j, "subspaces")) {
    std::vector<Subspace> r;
    for (const auto& m : matrices_from_json(row)) r.push_back(Subspace::span(m));
    if (static_cast<Index>(r.size()) != d.parts) throw ParseError("system row has the wrong length");
    d.subspaces.push_back(std::move(r));
  }
  if (static_cast<Index>(d.subspaces.size()) != d.k) throw ParseError("\"k\" does not match the row count");
  d.witness = witness_from_json(field(j, "witness"));
  return d;
}

Json report_to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json evidence = Json::array();
    for (const auto& [label, m] : c.evidence) {
      evidence.push_back(Json{{"label", label}, {"matrix", matrix_to_json(m)}});
    }
    checks.push_back(Json{{"name", c.name},
                          {"statement", c.statement},
                          {"passed", c.passed},
                          {"informational", c.informational},
                          {"detail", c.detail},
                          {"evidence", std::move(evidence)}});
  }
  return Json{{"title", r.title}, {"passed", r.passed()}, {"failures", r.failures()},
              {"checks", std::move(checks)}};
}

Report report_from_json(const Json& j) {
  Report r;
  const Json& title = field(j, "title");
  if (!title.is_string()) throw ParseError("report title must be a string");
  r.title = title.get<std::string>();
  for (const auto& c : array_field(j, "checks")) {
    Check k;
    try {
      k.name = field(c, "name").get<std::string>();
      k.statement = field(c, "statement").get<std::string>();
      k.passed = field(c, "passed").get<bool>();
      k.informational = c.value("informational", false);
      k.detail = c.value("detail", std::string());
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad check: ") + e.what());
    }
    if (c.contains("evidence")) {
      for (const auto& e : c.at("evidence")) {
        const Json& label = field(e, "label");
        if (!label.is_string()) throw ParseError("evidence label must be a string");
        k.evidence.emplace_back(label.get<std::string>(), matrix_from_json(field(e, "matrix")));
      }
    }
    r.checks.push_back(std::move(k));
  }
  return r;
}

Json certificate_to_json(const Certificate& c) {
  Json out{{"verdict", to_string(c.verdict)}};
  out["witness"] = c.witness ? witness_to_json(*c.witness) : Json();
  out["failing_transposition"] = c.failing_transposition ? Json(*c.failing_transposition) : Json();
  return out;
}

Json classification_to_json(const ClassificationResult& c) {
  Json out{{"verdict", to_string(c.verdict)}};
  out["weight"] = c.weight ? scalars_to_json(c.weight->values) : Json();
  out["partition"] = c.partition;
  out["subspace"] = c.subspace ? matrix_to_json(c.subspace->basis()) : Json();
  Json columns = Json::array();
  for (const auto& [values, dim] : c.columns) {
    columns.push_back(Json{{"eigenvalues", scalars_to_json(values)}, {"dimension", dim}});
  }
  out["columns"] = std::move(columns);
  return out;
}

const char* to_string(DocumentKind k) {
  switch (k) {
    case DocumentKind::Tss: return "tss";
    case DocumentKind::Arrangement: return "arrangement";
    case DocumentKind::System: return "system";
    case DocumentKind::Report: return "report";
  }
  return "?";
}

Document make_document(const Tss& t) { return {DocumentKind::Tss, tss_to_json(t), {}}; }
Document make_document(const Arrangement& a) {
  return {DocumentKind::Arrangement, arrangement_to_json(a), {}};
}
Document make_document(const DecompositionSystem& d) {
  return {DocumentKind::System, system_to_json(d), {}};
}
Document make_document(const Report& r) { return {DocumentKind::Report, report_to_json(r), {}}; }

std::string emit(const Document& d) {
  Json out{{"kind", to_string(d.kind)},
           {"meta", Json{{"field_basis", kFieldBasis}, {"version", kSchemaVersion}}},
           {"payload", d.payload}};
  if (!d.result.is_null()) out["result"] = d.result;
  return out.dump(2) + "\n";
}

Document parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  const Json& kind = field(j, "kind");
  const Json& meta = field(j, "meta");
  if (!field(meta, "version").is_number_integer() || meta.at("version").get<int>() != kSchemaVersion) {
    throw ParseError("unsupported schema version");
  }
  if (field(meta, "field_basis") != kFieldBasis) throw ParseError("unexpected field basis");
  Document d;
  const std::string k = kind.is_string() ? kind.get<std::string>() : "";
  // Parse the payload once so malformed documents fail here.
  if (k == "tss") {
    d.kind = DocumentKind::Tss;
    d.payload = tss_to_json(tss_from_json(field(j, "payload")));
  } else if (k == "arrangement") {
    d.kind = DocumentKind::Arrangement;
    d.payload = arrangement_to_json(arrangement_from_json(field(j, "payload")));
  } else if (k == "system") {
    d.kind = DocumentKind::System;
    d.payload = system_to_json(system_from_json(field(j, "payload")));
  } else if (k == "report") {
    d.kind = DocumentKind::Report;
    d.payload = report_to_json(report_from_json(field(j, "payload")));
  } else {
    throw ParseError("unknown document kind \"" + k + "\"");
  }
  if (j.contains("result")) d.result = j.at("result");
  return d;
}

Tss expect_tss(const Document& d) {
  if (d.kind != DocumentKind::Tss) {
    throw KindMismatch(std::string("expected a tss document, got ") + to_string(d.kind));
  }
  return tss_from_json(d.payload);
}

Arrangement expect_arrangement(const Document& d) {
  if (d.kind != DocumentKind::Arrangement) {
    throw KindMismatch(std::string("expected an arrangement document, got ") + to_string(d.kind));
  }
  return arrangement_from_json(d.payload);
}

}  // namespace tss
