#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catalog_fixture.hpp"
#include "ellft/verify.hpp"

using namespace ellft;
using nlohmann::json;

namespace {

const CheckResult* find_check(const VerificationReport& rep,
                              const std::string& id, const std::string& scope) {
  for (const auto& c : rep.checks)
    if (c.check_id == id && c.scope == scope) return &c;
  return nullptr;
}

// Adds a twisted C2 family and a record whose leading coefficients mirror the
// sign pattern of a genuinely twisted case: zeta(1,g2) = -1, zeta(g2,1) = 1,
// zeta(g2,g2) = -i.
json add_twisted_record(json doc) {
  doc["families"]["f2t"] = {{"gamma", "C2"}, {"delta_twisted", true}};
  auto restriction = [](const std::string& s, const std::string& h,
                        const std::string& coeff) {
    json r;
    r["s"] = s;
    r["h"] = h;
    r["sbar"] = s;
    r["hbar"] = h;
    r["terms"] = {{{"family", "f2t"},
                   {"basis", "xy"},
                   {"x", s},
                   {"y", h},
                   {"coeff", coeff}}};
    return r;
  };
  json u;
  u["label"] = "u2";
  u["centralizer"] = {{"finite", "C2"}};
  u["pair_count"] = 4;
  u["family"] = "f2t";
  u["delta_twisted"] = true;
  u["pairs"] = {{{"s", "1"}, {"h", "1"}},
                {{"s", "1"}, {"h", "g2"}, {"dual", {"g2", "1"}}},
                {{"s", "g2"}, {"h", "1"}, {"dual", {"1", "g2"}}},
                {{"s", "g2"}, {"h", "g2"}}};
  u["restrictions"] = {restriction("1", "1", "1"),
                       restriction("1", "g2", "-1"),
                       restriction("g2", "1", "1"),
                       restriction("g2", "g2", "-z4")};
  doc["groups"][0]["unipotents"].push_back(u);
  return doc;
}

json add_s3_family(json doc) {
  json s3;
  s3["points"] = 3;
  s3["generators"] = {{2, 1, 3}, {2, 3, 1}};
  s3["class_labels"] = {{"g2", {2, 1, 3}}, {"g3", {2, 3, 1}}};
  json self;
  self["chars"] = {{"eps", {{"degree", 1}, {"values", {{"g2", "-1"}}}}},
                   {"r", {{"degree", 2}}}};
  json z1;
  z1["class_labels"] = {{"g2", {2, 1, 3}}, {"g3", {2, 3, 1}}};
  z1["chars"] = self["chars"];
  json zg2;
  zg2["class_labels"] = {{"g2", {2, 1, 3}}};
  zg2["chars"] = {{"eps", {{"degree", 1}, {"values", {{"g2", "-1"}}}}}};
  json zg3;
  zg3["class_labels"] = {{"g3", {2, 3, 1}}};
  zg3["chars"] = {{"theta", {{"values", {{"g3", "z3"}}}}},
                  {"theta2", {{"values", {{"g3", "z3^2"}}}}}};
  s3["char_fingerprints"] = {{"self", self}, {"1", z1}, {"g2", zg2}, {"g3", zg3}};
  doc["family_groups"]["S3"] = s3;
  doc["families"]["f3"] = {{"gamma", "S3"}};
  return doc;
}

}  // namespace

TEST_CASE("validate_tables passes on the mini catalog") {
  Catalog cat = load_doc(mini_catalog_doc(), "vt");
  VerificationReport rep = validate_tables(cat);
  CHECK(!rep.has_fail());
  const CheckResult* counts = find_check(rep, "counts", "T1/u0");
  REQUIRE(counts != nullptr);
  CHECK(counts->status == "pass");
  const CheckResult* cov = find_check(rep, "coverage", "T1/u0");
  REQUIRE(cov != nullptr);
  CHECK(cov->status == "pass");
}

TEST_CASE("validate_tables catches a wrong pair count") {
  json doc = mini_catalog_doc();
  doc["groups"][0]["unipotents"][0]["pair_count"] = 5;
  VerificationReport rep = validate_tables(load_doc(doc, "vt-bad"));
  const CheckResult* counts = find_check(rep, "counts", "T1/u0");
  REQUIRE(counts != nullptr);
  CHECK(counts->status == "fail");
  CHECK(counts->witness.find("pair orbits") != std::string::npos);
}

TEST_CASE("validate_tables catches an orbit missing from the pair list") {
  json doc = mini_catalog_doc();
  // duplicate (1,1) in place of (g2,g2): duplicate orbit + coverage gap
  doc["groups"][0]["unipotents"][0]["pairs"][3] = {{"s", "1"}, {"h", "1"}};
  VerificationReport rep = validate_tables(load_doc(doc, "vt-dup"));
  CHECK(rep.has_fail());
}

TEST_CASE("uncovered split-relevant pairs downgrade coverage to partial") {
  json doc = mini_catalog_doc();
  doc["groups"][0]["unipotents"][0]["restrictions"].erase(3);
  VerificationReport rep = validate_tables(load_doc(doc, "vt-uncov"));
  const CheckResult* cov = find_check(rep, "coverage", "T1/u0");
  REQUIRE(cov != nullptr);
  CHECK(cov->status == "partial");
  CHECK(cov->witness.find("(g2,g2)") != std::string::npos);
}

TEST_CASE("check_main passes and dedups dual pairs") {
  Catalog cat = load_doc(mini_catalog_doc(), "main");
  VerificationReport rep = check_main_theorem(cat);
  CHECK(!rep.has_fail());
  CHECK(!rep.has_partial());
  // (g2,1) is verified from the (1,g2) side only.
  CHECK(find_check(rep, "main", "T1/u0/(1,g2)") != nullptr);
  CHECK(find_check(rep, "main", "T1/u0/(g2,1)") == nullptr);
  CHECK(rep.count("pass") == 3);
}

TEST_CASE("check_main on the twisted record") {
  Catalog cat = load_doc(add_twisted_record(mini_catalog_doc()), "main-tw");
  Filter f{"", "u2"};
  VerificationReport rep = check_main_theorem(cat, f);
  CHECK(!rep.has_fail());
  CHECK(rep.count("pass") == 3);

  VerificationReport zrep = check_zeta(cat, f);
  CHECK(!zrep.has_fail());
  CHECK(!zrep.has_partial());
  CHECK(zrep.count("pass") == 3);
}

TEST_CASE("a flipped sign fails with a localized witness") {
  json doc = mini_catalog_doc();
  doc["groups"][0]["unipotents"][0]["restrictions"][1]["terms"][0]["coeff"] =
      "-1";
  Catalog cat = load_doc(doc, "main-flip");
  VerificationReport rep = check_main_theorem(cat);
  const CheckResult* c = find_check(rep, "main", "T1/u0/(1,g2)");
  REQUIRE(c != nullptr);
  CHECK(c->status == "fail");
  CHECK(c->witness.find("family f2") != std::string::npos);
}

TEST_CASE("check_main is symmetric in the pair orientation") {
  // Flipping which side carries the bad sign reports the same pass/fail set
  // (always keyed on the lex-smaller pair).
  for (int side : {1, 2}) {
    json doc = mini_catalog_doc();
    doc["groups"][0]["unipotents"][0]["restrictions"][side]["terms"][0]
       ["coeff"] = "-1";
    Catalog cat = load_doc(doc, "main-sym" + std::to_string(side));
    VerificationReport rep = check_main_theorem(cat);
    const CheckResult* c = find_check(rep, "main", "T1/u0/(1,g2)");
    REQUIRE(c != nullptr);
    CHECK(c->status == "fail");
  }
}

TEST_CASE("partial records report partial, not pass") {
  json doc = mini_catalog_doc();
  json& r = doc["groups"][0]["unipotents"][0]["restrictions"][0];
  r["complete"] = false;
  r["named"] = {"gamma(open)"};
  Catalog cat = load_doc(doc, "main-partial");
  VerificationReport rep = check_main_theorem(cat);
  const CheckResult* c = find_check(rep, "main", "T1/u0/(1,1)");
  REQUIRE(c != nullptr);
  CHECK(c->status == "partial");
  CHECK(c->witness.find("gamma(open)") != std::string::npos);
  CHECK(rep.has_partial());
}

TEST_CASE("check_zeta validates leading coefficients") {
  Catalog cat = load_doc(mini_catalog_doc(), "zeta");
  VerificationReport rep = check_zeta(cat);
  CHECK(!rep.has_fail());
  CHECK(rep.count("pass") == 3);

  // A non-root-of-unity leading coefficient fails.
  json doc = mini_catalog_doc();
  doc["groups"][0]["unipotents"][0]["restrictions"][1]["terms"][0]["coeff"] =
      "2";
  VerificationReport bad = check_zeta(load_doc(doc, "zeta-bad"));
  const CheckResult* c = find_check(bad, "zeta", "T1/u0/(1,g2)");
  REQUIRE(c != nullptr);
  CHECK(c->status == "fail");

  // Missing sbar/hbar yields partial.
  doc = mini_catalog_doc();
  doc["groups"][0]["unipotents"][0]["restrictions"][1].erase("sbar");
  VerificationReport missing = check_zeta(load_doc(doc, "zeta-miss"));
  const CheckResult* m = find_check(missing, "zeta", "T1/u0/(1,g2)");
  REQUIRE(m != nullptr);
  CHECK(m->status == "partial");
}

TEST_CASE("check_self_dual evaluates claims and builtin identities") {
  Catalog cat = load_doc(mini_catalog_doc(), "sd");
  VerificationReport rep = check_self_dual(cat);
  const CheckResult* named = find_check(rep, "selfdual", "gamma(test)");
  REQUIRE(named != nullptr);
  CHECK(named->status == "pass");
  const CheckResult* open = find_check(rep, "selfdual", "gamma(open)");
  REQUIRE(open != nullptr);
  CHECK(open->status == "partial");
  const CheckResult* v2 = find_check(rep, "selfdual", "v2/f2");
  REQUIRE(v2 != nullptr);
  CHECK(v2->status == "pass");

  // Break the self-dual claim.
  json doc = mini_catalog_doc();
  doc["named_combinations"][0]["terms"][1]["coeff"] = "-1";
  VerificationReport bad = check_self_dual(load_doc(doc, "sd-bad"));
  const CheckResult* b = find_check(bad, "selfdual", "gamma(test)");
  REQUIRE(b != nullptr);
  CHECK(b->status == "fail");
}

TEST_CASE("maps_to claims compare against the target combination") {
  json doc = mini_catalog_doc();
  json a, b;
  a["name"] = "combo-a";
  a["claim"] = "maps_to:combo-b";
  a["terms"] = {{{"family", "f2"}, {"basis", "xy"}, {"x", "1"}, {"y", "g2"}}};
  b["name"] = "combo-b";
  b["terms"] = {{{"family", "f2"}, {"basis", "xy"}, {"x", "g2"}, {"y", "1"}}};
  doc["named_combinations"].push_back(a);
  doc["named_combinations"].push_back(b);
  VerificationReport rep = check_self_dual(load_doc(doc, "maps"));
  const CheckResult* c = find_check(rep, "selfdual", "combo-a->combo-b");
  REQUIRE(c != nullptr);
  CHECK(c->status == "pass");
}

TEST_CASE("S3 builtin lemma runs on catalog S3 families") {
  Catalog cat = load_doc(add_s3_family(mini_catalog_doc()), "s3");
  CHECK(cat.family("f3").size() == 8);
  VerificationReport rep = check_self_dual(cat, {"s3-lemma/f3"});
  int lemma = 0;
  for (const auto& c : rep.checks)
    if (c.check_id == "selfdual" && c.scope.rfind("s3-lemma/f3/", 0) == 0) {
      ++lemma;
      CHECK(c.status == "pass");
    }
  CHECK(lemma == 8);
}

TEST_CASE("filters restrict the checked records") {
  Catalog cat = load_doc(add_twisted_record(mini_catalog_doc()), "filter");
  Filter only_u0{"T1", "u0"};
  VerificationReport rep = check_main_theorem(cat, only_u0);
  for (const auto& c : rep.checks)
    CHECK(c.scope.rfind("T1/u0/", 0) == 0);
  Filter nothing{"nope", ""};
  CHECK(check_main_theorem(cat, nothing).checks.empty());
}

TEST_CASE("report formats are deterministic and machine readable") {
  Catalog cat = load_doc(mini_catalog_doc(), "fmt");
  VerificationReport rep = check_main_theorem(cat);
  rep.merge(check_zeta(cat));
  rep.normalize();
  std::string text = rep.to_text();
  CHECK(text.find("summary:") != std::string::npos);
  json parsed = json::parse(rep.to_json());
  CHECK(parsed["summary"]["fail"] == 0);
  CHECK(parsed["checks"].size() == rep.checks.size());
  // normalized order: sorted by (check_id, scope)
  for (size_t i = 1; i < rep.checks.size(); ++i) {
    auto key = [&](const CheckResult& c) {
      return std::make_pair(c.check_id, c.scope);
    };
    CHECK(key(rep.checks[i - 1]) <= key(rep.checks[i]));
  }
}
