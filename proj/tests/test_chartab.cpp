#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ellft/chartab.hpp"

using namespace ellft;

namespace {

FinGroup sym(int n) {
  Perm t = perm_identity(n);
  std::swap(t[0], t[1]);
  Perm c(n);
  for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
  return make_group(n, {t, c});
}

std::vector<long> degree_multiset(const CharTable& t) {
  std::vector<long> d;
  for (int r = 0; r < t.num_chars(); ++r) d.push_back(t.degree(r));
  std::sort(d.begin(), d.end());
  return d;
}

// Checks that the row for the character identified by (degree, value at the
// class of `probe`) matches the expected values at the given elements.
void check_row(const CharTable& t, long degree, const Perm& probe, long probe_val,
               const std::vector<std::pair<Perm, CycNum>>& expected) {
  const FinGroup& g = *t.group;
  int probe_cls = g.class_of[g.index_of(probe)];
  int row = -1;
  for (int r = 0; r < t.num_chars(); ++r)
    if (t.degree(r) == degree && t.value(r, probe_cls) == CycNum(probe_val)) {
      REQUIRE(row == -1);
      row = r;
    }
  REQUIRE(row >= 0);
  for (const auto& [perm, val] : expected) {
    CAPTURE(val.to_string());
    CHECK(t.value(row, g.class_of[g.index_of(perm)]) == val);
  }
}

}  // namespace

TEST_CASE("cyclic group tables") {
  FinGroup c2 = make_group(2, {Perm{1, 0}});
  CharTable t2 = character_table(c2);
  REQUIRE(t2.num_chars() == 2);
  CHECK(t2.rows[0] == std::vector<CycNum>{CycNum(1), CycNum(1)});
  CHECK(t2.rows[1] == std::vector<CycNum>{CycNum(1), CycNum(-1)});

  FinGroup c3 = make_group(3, {Perm{1, 2, 0}});
  CharTable t3 = character_table(c3);
  REQUIRE(t3.num_chars() == 3);
  CHECK(t3.rows[0] == std::vector<CycNum>(3, CycNum(1)));
  // The two nontrivial rows take the primitive cube roots of unity on the
  // generator classes, conjugate to each other.
  for (int r = 1; r < 3; ++r)
    for (int c = 1; c < 3; ++c) {
      CHECK(t3.value(r, c) != CycNum(1));
      CHECK(t3.value(r, c) * t3.value(r, c) * t3.value(r, c) == CycNum(1));
    }
  CHECK(t3.rows[1][1] == t3.rows[2][1].conj());

  FinGroup c4 = make_group(4, {Perm{1, 2, 3, 0}});
  CharTable t4 = character_table(c4);
  std::vector<long> expected_d{1, 1, 1, 1};
  CHECK(degree_multiset(t4) == expected_d);
  CycNum i = CycNum::root_of_unity(4, 1);
  bool has_i = false;
  for (int r = 0; r < 4; ++r) has_i = has_i || t4.value(r, 1) == i;
  CHECK(has_i);

  FinGroup c5 = make_group(5, {Perm{1, 2, 3, 4, 0}});
  CHECK(character_table(c5).num_chars() == 5);
  FinGroup c6 = make_group(5, {Perm{1, 0, 3, 4, 2}});
  REQUIRE(c6.order() == 6);
  CHECK(character_table(c6).num_chars() == 6);
}

TEST_CASE("symmetric group degree multisets") {
  CHECK(degree_multiset(character_table(sym(3))) == std::vector<long>{1, 1, 2});
  CHECK(degree_multiset(character_table(sym(4))) ==
        std::vector<long>{1, 1, 2, 3, 3});
  CHECK(degree_multiset(character_table(sym(5))) ==
        std::vector<long>{1, 1, 4, 4, 5, 5, 6});
}

TEST_CASE("dihedral group of order 8") {
  FinGroup d8 = make_group(4, {Perm{2, 3, 1, 0}, Perm{1, 0, 2, 3}});
  CharTable t = character_table(d8);
  CHECK(degree_multiset(t) == std::vector<long>{1, 1, 1, 1, 2});
}

TEST_CASE("S4 character values match the classical table") {
  FinGroup s4 = sym(4);
  CharTable t = character_table(s4);
  Perm id = perm_identity(4);
  Perm g2{1, 0, 2, 3}, g22{1, 0, 3, 2}, g3{1, 2, 0, 3}, g4{1, 2, 3, 0};
  check_row(t, 3, g2, 1,
            {{id, CycNum(3)}, {g2, CycNum(1)}, {g22, CycNum(-1)},
             {g3, CycNum(0)}, {g4, CycNum(-1)}});
  check_row(t, 3, g2, -1,
            {{g2, CycNum(-1)}, {g22, CycNum(-1)}, {g3, CycNum(0)},
             {g4, CycNum(1)}});
  check_row(t, 2, g2, 0,
            {{g22, CycNum(2)}, {g3, CycNum(-1)}, {g4, CycNum(0)}});
  check_row(t, 1, g2, -1, {{g22, CycNum(1)}, {g3, CycNum(1)}, {g4, CycNum(-1)}});
}

TEST_CASE("S5 character values match the classical table") {
  FinGroup s5 = sym(5);
  CharTable t = character_table(s5);
  Perm id = perm_identity(5);
  Perm g2{1, 0, 2, 3, 4}, g22{1, 0, 3, 2, 4}, g3{1, 2, 0, 3, 4};
  Perm g6{1, 0, 3, 4, 2}, g4{1, 2, 3, 0, 4}, g5{1, 2, 3, 4, 0};
  check_row(t, 4, g2, 2,
            {{g22, CycNum(0)}, {g3, CycNum(1)}, {g6, CycNum(-1)},
             {g4, CycNum(0)}, {g5, CycNum(-1)}});
  check_row(t, 5, g2, 1,
            {{g22, CycNum(1)}, {g3, CycNum(-1)}, {g6, CycNum(1)},
             {g4, CycNum(-1)}, {g5, CycNum(0)}});
  check_row(t, 6, g2, 0,
            {{g22, CycNum(-2)}, {g3, CycNum(0)}, {g6, CycNum(0)},
             {g4, CycNum(0)}, {g5, CycNum(1)}});
  check_row(t, 5, g2, -1,
            {{g22, CycNum(1)}, {g3, CycNum(-1)}, {g6, CycNum(-1)},
             {g4, CycNum(1)}, {g5, CycNum(0)}});
  check_row(t, 4, g2, -2,
            {{g22, CycNum(0)}, {g3, CycNum(1)}, {g6, CycNum(1)},
             {g4, CycNum(0)}, {g5, CycNum(-1)}});
  check_row(t, 1, g2, -1,
            {{g22, CycNum(1)}, {g3, CycNum(1)}, {g6, CycNum(-1)},
             {g4, CycNum(-1)}, {g5, CycNum(1)}});
  (void)id;
}

TEST_CASE("trivial character is always row 0") {
  for (const FinGroup& g :
       {sym(3), sym(4), sym(5), make_group(4, {Perm{2, 3, 1, 0}, Perm{1, 0, 2, 3}}),
        make_group(2, {Perm{1, 0}})}) {
    CharTable t = character_table(g);
    for (int c = 0; c < g.num_classes(); ++c) CHECK(t.value(0, c) == CycNum(1));
  }
}

TEST_CASE("orthogonality check flags a corrupted table") {
  FinGroup s3 = sym(3);
  CharTable t = character_table(s3);
  std::string detail;
  CHECK(check_orthogonality(t, &detail));
  CHECK(detail.empty());
  t.rows[2][1] = CycNum(7);
  CHECK(!check_orthogonality(t, &detail));
  CHECK(!detail.empty());
}

TEST_CASE("direct product table") {
  FinGroup c2 = make_group(2, {Perm{1, 0}});
  FinGroup prod = direct_product(c2, sym(3));
  CharTable t = character_table(prod);
  CHECK(degree_multiset(t) == std::vector<long>{1, 1, 1, 1, 2, 2});

  FinGroup c3 = make_group(3, {Perm{1, 2, 0}});
  CHECK(character_table(direct_product(c3, c3)).num_chars() == 9);
}

TEST_CASE("character fingerprints") {
  FinGroup s4 = sym(4);
  s4.class_labels["g2"] = s4.class_of[s4.index_of(Perm{1, 0, 2, 3})];
  CharTable t = character_table(s4);

  CharFingerprint std3{3, {{"g2", CycNum(1)}}};
  CHECK(t.degree(find_char(t, std3)) == 3);

  CharFingerprint just2{2, {}};
  CHECK(t.degree(find_char(t, just2)) == 2);

  CharFingerprint ambiguous{3, {}};
  CHECK_THROWS_AS(find_char(t, ambiguous), std::runtime_error);
  CharFingerprint missing{3, {{"g2", CycNum(5)}}};
  CHECK_THROWS_AS(find_char(t, missing), std::runtime_error);

  t.char_labels["lambda1"] = find_char(t, std3);
  CHECK(t.labeled_char("lambda1") == find_char(t, std3));
  CHECK_THROWS_AS(t.labeled_char("nope"), std::runtime_error);
}
