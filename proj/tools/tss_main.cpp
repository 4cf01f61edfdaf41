// tss: construct, verify and classify totally symmetric sets from the shell.
//
// Exit codes: 0 success (totally symmetric / irreducible / all checks
// pass), 1 a negative verdict or a failed check, 2 usage or parse errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "tss/constructions.hpp"
#include "tss/errors.hpp"
#include "tss/json_io.hpp"
#include "tss/paper_suite.hpp"
#include "tss/spectral.hpp"

using namespace tss;

namespace {

constexpr int kOk = 0, kNegative = 1, kUsage = 2;

struct Options {
  std::string name;
  std::string in, out;
  std::string format = "json";
  Index k = 3, p = 1, n = 2;
  std::string lambda, mu, nu, values;
  bool tamper_t4 = false;
};

Scalar scalar_arg(const std::string& text, const std::string& fallback) {
  const std::string s = text.empty() ? fallback : text;
  if (!s.empty() && s.front() == '[') {
    try {
      return scalar_from_json(Json::parse(s));
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("bad scalar: ") + e.what());
    }
  }
  return parse_scalar(s);
}

std::vector<Scalar> values_arg(const std::string& text) {
  if (text.empty()) throw BadParams("--values is required, e.g. --values 1,1,2");
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_scalar(item));
  return out;
}

std::string read_file(const std::string& path) {
  if (path.empty()) throw BadParams("--in is required");
  std::ifstream f(path);
  if (!f) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_output(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw ParseError("cannot write " + o.out);
  f << text;
}

void print_report(std::ostream& os, const Report& r) {
  for (const auto& c : r.checks) {
    const char* tag = c.passed ? "PASS" : (c.informational ? "NOTE" : "FAIL");
    os << tag << "  " << c.name << "  [" << c.statement << "]";
    if (!c.detail.empty()) os << "  " << c.detail;
    os << "\n";
    if (!c.passed) {
      for (const auto& [label, m] : c.evidence) os << "    " << label << ":\n" << to_display_string(m);
    }
  }
  os << r.checks.size() << " checks, " << r.failures() << " failed\n";
}

Report verdict_report(const std::string& title, const Certificate& c) {
  Report r;
  r.title = title;
  std::string detail = to_string(c.verdict);
  if (c.failing_transposition) detail += " at transposition " + std::to_string(*c.failing_transposition + 1);
  r.add(boolean_check("totally symmetric", "some ambient element realizes every permutation",
                      c.verdict == Verdict::TotallySymmetric, detail));
  return r;
}

Document construct_impl(const Options& o) {
  const auto& name = o.name;
  auto checked_tss = [](const Tss& t) {
    const auto v = verify_tss(t).verdict;
    if (v == Verdict::NotTotallySymmetric) throw std::runtime_error("construction failed verification");
    return make_document(t);
  };
  auto checked_arrangement = [](const Arrangement& a) {
    const auto v = verify_arrangement(a).verdict;
    if (v == Verdict::NotTotallySymmetric) throw std::runtime_error("construction failed verification");
    return make_document(a);
  };
  if (name == "standard") {
    return checked_tss(standard(o.k, scalar_arg(o.lambda, "2"), scalar_arg(o.nu, "1")));
  }
  if (name == "partition") return checked_tss(partition_construction(Weight{values_arg(o.values)}));
  if (name == "perm") return checked_tss(permutation_type(values_arg(o.values)));
  if (name == "induction") {
    const Tss base = expect_tss(parse_document(read_file(o.in)));
    return checked_tss(induction(base, o.p, scalar_arg(o.lambda, "2")));
  }
  if (name == "simplex") return checked_arrangement(simplex_arrangement(o.n));
  if (name == "dual-simplex") return checked_arrangement(dual_simplex_arrangement(o.n));
  if (name == "suspension-simplex") {
    return checked_tss(suspension(simplex_arrangement(o.n), scalar_arg(o.lambda, "2")));
  }
  if (name == "ncsimplex") return checked_tss(ncsimplex(o.k, scalar_arg(o.lambda, "2"), scalar_arg(o.mu, "1")));
  if (name == "s5-rep") {
    const auto t = tilde_sigma5_rep();
    Report r = presentation_suite(t);
    r.title = "double cover representation T_1, ..., T_4";
    if (!r.passed()) throw std::runtime_error("construction failed verification");
    Document d = make_document(r);
    Json ts = Json::array();
    for (const auto& m : t) ts.push_back(matrix_to_json(m));
    d.result = Json{{"generators", std::move(ts)}};
    return d;
  }
  if (name == "s5-arrangement") return checked_arrangement(tilde_sigma5_arrangement());
  if (name == "s5-system") {
    const auto sys = tilde_sigma5_system();
    check_system(sys);
    if (!check_system_witness(sys)) throw std::runtime_error("construction failed verification");
    return make_document(sys);
  }
  if (name == "s5-construction") {
    return checked_tss(tilde_sigma5_construction(scalar_arg(o.lambda, "2"), scalar_arg(o.mu, "1")));
  }
  if (name == "sporadic4") return checked_tss(sporadic4(scalar_arg(o.nu, "1")));
  throw UnknownConstruction("unknown construction \"" + name + "\"");
}

Document construct(const Options& o) {
  try {
    return construct_impl(o);
  } catch (const ParseError&) {
    throw;
  } catch (const KindMismatch&) {
    throw;
  } catch (const UnknownConstruction&) {
    throw;
  } catch (const Error& e) {
    throw BadParams(e.what());
  }
}

int cmd_verify(const Options& o) {
  const Document in = parse_document(read_file(o.in));
  Certificate c;
  if (in.kind == DocumentKind::Tss) {
    c = verify_tss(tss_from_json(in.payload));
  } else if (in.kind == DocumentKind::Arrangement) {
    c = verify_arrangement(arrangement_from_json(in.payload));
  } else {
    throw KindMismatch(std::string("verify takes a tss or arrangement document, got ") + to_string(in.kind));
  }
  Document out = make_document(verdict_report("verify", c));
  out.result = certificate_to_json(c);
  write_output(o, emit(out));
  std::cerr << to_string(c.verdict) << "\n";
  return c.verdict == Verdict::TotallySymmetric ? kOk : kNegative;
}

int cmd_classify(const Options& o) {
  const Tss t = expect_tss(parse_document(read_file(o.in)));
  ClassificationResult res;
  try {
    res = classify_commutative(t);
  } catch (const NotCommutative& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNegative;
  }
  Report r;
  r.title = "classify";
  std::string detail = to_string(res.verdict);
  if (!res.partition.empty()) detail += " " + res.partition;
  detail += ", dimension " + std::to_string(t.n);
  r.add(boolean_check("irreducible", "isomorphic to the partition construction of a weight",
                      res.verdict == Classification::Irreducible, detail));
  Document out = make_document(r);
  out.result = classification_to_json(res);
  out.result["dimension"] = t.n;
  write_output(o, emit(out));
  std::cerr << detail << "\n";
  return res.verdict == Classification::Irreducible ? kOk : kNegative;
}

int cmd_stabilizer(const Options& o) {
  const Arrangement a = expect_arrangement(parse_document(read_file(o.in)));
  const auto s = stabilizer_dimension(a);
  Report r;
  r.title = "stabilizer";
  r.add(boolean_check("stabilizer dimension", "dimension of {X : X W_i in W_i for all i}", true,
                      std::to_string(s.dimension)));
  Document out = make_document(r);
  Json basis = Json::array();
  for (const auto& m : s.basis) basis.push_back(matrix_to_json(m));
  out.result = Json{{"dimension", s.dimension}, {"basis", std::move(basis)}};
  write_output(o, emit(out));
  std::cerr << "dimension " << s.dimension << "\n";
  return kOk;
}

int cmd_paper_suite(const Options& o) {
  const Report r = paper_suite(SuiteOptions{o.tamper_t4});
  print_report(std::cout, r);
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) throw ParseError("cannot write " + o.out);
    f << emit(make_document(r));
  }
  return r.passed() ? kOk : kNegative;
}

void print_matrices(std::ostream& os, const std::string& label, const Json& ms) {
  for (std::size_t i = 0; i < ms.size(); ++i) {
    os << label << " " << i + 1 << ":\n" << to_display_string(matrix_from_json(ms[i]));
  }
}

int cmd_export(const Options& o) {
  const Document d = parse_document(read_file(o.in));
  if (o.format == "json") {
    write_output(o, emit(d));
    return kOk;
  }
  if (o.format != "text") throw BadParams("--format must be json or text");
  std::ostringstream os;
  os << to_string(d.kind) << "\n";
  switch (d.kind) {
    case DocumentKind::Tss:
      os << "n = " << d.payload["n"] << ", k = " << d.payload["k"] << "\n";
      print_matrices(os, "A", d.payload["elements"]);
      if (d.payload.contains("witness")) print_matrices(os, "P", d.payload["witness"]["transpositions"]);
      break;
    case DocumentKind::Arrangement:
      os << "n = " << d.payload["n"] << ", d = " << d.payload["d"] << ", k = " << d.payload["k"] << "\n";
      print_matrices(os, "W", d.payload["planes"]);
      break;
    case DocumentKind::System:
      os << "n = " << d.payload["n"] << ", k = " << d.payload["k"] << ", parts = " << d.payload["parts"] << "\n";
      for (std::size_t i = 0; i < d.payload["subspaces"].size(); ++i) {
        print_matrices(os, "row " + std::to_string(i + 1) + " part", d.payload["subspaces"][i]);
      }
      break;
    case DocumentKind::Report:
      print_report(os, report_from_json(d.payload));
      break;
  }
  write_output(o, os.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for totally symmetric sets of matrices and subspace arrangements"};
  app.require_subcommand(1);
  Options o;

  auto* construct_cmd = app.add_subcommand("construct", "Build a catalog object and write it as JSON");
  construct_cmd->add_option("name", o.name,
                            "standard, partition, induction, perm, simplex, dual-simplex, "
                            "suspension-simplex, ncsimplex, s5-rep, s5-arrangement, s5-system, "
                            "s5-construction, sporadic4")
      ->required();
  construct_cmd->add_option("--k", o.k, "number of elements");
  construct_cmd->add_option("--p", o.p, "induction: number of added letters");
  construct_cmd->add_option("--n", o.n, "simplex dimension");
  construct_cmd->add_option("--lambda", o.lambda, "scalar, e.g. 2, 1/2, zeta, 1+i*sqrt2");
  construct_cmd->add_option("--mu", o.mu, "scalar");
  construct_cmd->add_option("--nu", o.nu, "scalar");
  construct_cmd->add_option("--values", o.values, "comma-separated scalars (partition, perm)");
  construct_cmd->add_option("--in", o.in, "input tss document (induction)");
  construct_cmd->add_option("--out", o.out, "output file (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Decide total symmetry of a tss or arrangement");
  auto* classify_cmd = app.add_subcommand("classify", "Classify a commutative set");
  auto* stab_cmd = app.add_subcommand("stabilizer", "Stabilizer of an arrangement");
  auto* export_cmd = app.add_subcommand("export", "Re-emit a document as canonical JSON or text");
  for (auto* c : {verify_cmd, classify_cmd, stab_cmd, export_cmd}) {
    c->add_option("--in", o.in, "input document")->required();
    c->add_option("--out", o.out, "output file (default stdout)");
  }
  export_cmd->add_option("--format", o.format, "json or text");

  auto* suite_cmd = app.add_subcommand("paper-suite", "Run every exact check of the catalog");
  suite_cmd->add_option("--out", o.out, "write the report document here");
  suite_cmd->add_flag("--tamper-t4", o.tamper_t4, "perturb one entry of T_4 (fault injection)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*construct_cmd) {
      write_output(o, emit(construct(o)));
      return kOk;
    }
    if (*verify_cmd) return cmd_verify(o);
    if (*classify_cmd) return cmd_classify(o);
    if (*stab_cmd) return cmd_stabilizer(o);
    if (*suite_cmd) return cmd_paper_suite(o);
    if (*export_cmd) return cmd_export(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const KindMismatch& e) {
    std::cerr << "kind mismatch: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownConstruction& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BadParams& e) {
    std::cerr << "bad parameters: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNegative;
  }
  return kUsage;
}
