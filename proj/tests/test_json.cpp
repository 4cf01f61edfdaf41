#include "doctest.h"

#include "tss/errors.hpp"
#include "tss/json_io.hpp"
#include "tss/paper_suite.hpp"

using namespace tss;

TEST_CASE("scalar encoding") {
  const Json z = scalar_to_json(constants::zeta());
  CHECK(z == Json::parse(R"(["1/2","0","0","0","0","0","1/2","0"])"));
  CHECK(scalar_from_json(z) == constants::zeta());
  CHECK(scalar_from_json(Json::parse(R"(["2/4","0","0","0","0","0","-3/-6","0"])")) == constants::zeta());
  CHECK(scalar_from_json(Json("1/2 + 1/2*i*sqrt3")) == constants::zeta());
  CHECK(scalar_from_json(Json(3)) == Scalar(3));
  CHECK_THROWS_AS(scalar_from_json(Json::parse(R"(["1","0"])")), ParseError);
  CHECK_THROWS_AS(scalar_from_json(Json::parse(R"(["x","0","0","0","0","0","0","0"])")), ParseError);
  CHECK_THROWS_AS(scalar_from_json(Json::parse(R"(["1/0","0","0","0","0","0","0","0"])")), ParseError);
}

TEST_CASE("matrix encoding") {
  Matrix m(2, 3);
  m << Scalar(1), Scalar(2), Scalar(3), constants::sqrt2(), Scalar(0), constants::i_unit();
  const Json j = matrix_to_json(m);
  CHECK(j["rows"] == 2);
  CHECK(j["cols"] == 3);
  CHECK(j["entries"][3] == scalar_to_json(constants::sqrt2()));
  CHECK((matrix_from_json(j).array() == m.array()).all());
  Json bad = j;
  bad["entries"].erase(0);
  CHECK_THROWS_AS(matrix_from_json(bad), ParseError);
}

TEST_CASE("documents round trip") {
  std::vector<Document> docs = {
      make_document(standard(3, Scalar(2), Scalar(1))),
      make_document(partition_construction(weight_for_partition({1, 1, 2}))),
      make_document(induction(standard(2, Scalar(2), Scalar(1)), 1, Scalar(3))),
      make_document(permutation_type({Scalar(1), Scalar(2), Scalar(3)})),
      make_document(ncsimplex(3, Scalar(2), Scalar(1))),
      make_document(suspension(simplex_arrangement(2), Scalar(2))),
      make_document(tilde_sigma5_construction(Scalar(2), Scalar(1))),
      make_document(sporadic4(Scalar(0))),
      make_document(simplex_arrangement(3)),
      make_document(dual_simplex_arrangement(3)),
      make_document(tilde_sigma5_arrangement()),
      make_document(tilde_sigma5_system()),
      make_document(s5_nonexistence_suite()),
  };
  for (const auto& d : docs) {
    const std::string once = emit(d);
    const std::string twice = emit(parse_document(once));
    CHECK(once == twice);
  }

  const Tss t = sporadic4(Scalar(1));
  const Tss back = expect_tss(parse_document(emit(make_document(t))));
  CHECK(back.k == 4);
  CHECK(back.parameters == t.parameters);
  for (std::size_t i = 0; i < 4; ++i) CHECK((back.elements[i].array() == t.elements[i].array()).all());
  CHECK(verify_tss(back).verdict == Verdict::TotallySymmetric);

  const Arrangement a = expect_arrangement(parse_document(emit(make_document(simplex_arrangement(2)))));
  CHECK(a.strong.has_value());
  CHECK(suspension(a, Scalar(1)).k == 3);

  const Report r = report_from_json(parse_document(emit(make_document(s5_nonexistence_suite()))).payload);
  CHECK(r.passed());
  CHECK(r.checks.size() == s5_nonexistence_suite().checks.size());
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(parse_document("{"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"kind":"tss"})"), ParseError);
  std::string good = emit(make_document(standard(2, Scalar(2), Scalar(1))));
  Json j = Json::parse(good);
  j["kind"] = "widget";
  CHECK_THROWS_AS(parse_document(j.dump()), ParseError);
  j = Json::parse(good);
  j["meta"]["version"] = 99;
  CHECK_THROWS_AS(parse_document(j.dump()), ParseError);
  j = Json::parse(good);
  j["payload"]["k"] = 3;
  CHECK_THROWS_AS(parse_document(j.dump()), ParseError);
  j = Json::parse(good);
  j["payload"]["elements"][1]["rows"] = 1;
  j["payload"]["elements"][1]["entries"] = Json::array({scalar_to_json(Scalar(1)), scalar_to_json(Scalar(1))});
  CHECK_THROWS_AS(parse_document(j.dump()), ParseError);

  const Document arr = make_document(simplex_arrangement(2));
  CHECK_THROWS_AS(expect_tss(arr), KindMismatch);
  CHECK_THROWS_AS(expect_arrangement(make_document(standard(2, Scalar(2), Scalar(1)))), KindMismatch);
}

TEST_CASE("catalog suite") {
  const Report r = paper_suite();
  CHECK(r.passed());
  CHECK(r.checks.size() >= 25);
  CHECK(std::is_sorted(r.checks.begin(), r.checks.end(),
                       [](const Check& a, const Check& b) { return a.name < b.name; }));

  const Report bad = paper_suite(SuiteOptions{true});
  CHECK(!bad.passed());
  bool found = false;
  for (const auto& c : bad.checks) {
    if (c.name == "presentation (t_3 t_4)^3 = z") {
      found = true;
      CHECK(!c.passed);
      REQUIRE(c.evidence.size() == 3);
      CHECK(!is_zero(c.evidence[2].second));
    }
    if (c.name == "presentation (t_1 t_2)^3 = z") CHECK(c.passed);
  }
  CHECK(found);
}
