#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <msq/sign_tables.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

using namespace msq;

TEST_CASE("family plumbing") {
  for (const char* n : {"d4", "c3", "f4", "d6", "e7", "e8", "a5", "e6"})
    CHECK(family_name(family_from_name(n)) == n);
  CHECK_THROWS_AS(family_from_name("g2"), std::invalid_argument);
  CHECK(family_subsets(Family::d4).size() == 2);
  CHECK(family_subsets(Family::c3).size() == 4);
  CHECK(family_subsets(Family::f4).size() == 8);
  CHECK(family_subsets(Family::d6).size() == 4);
  CHECK(family_subsets(Family::e7).size() == 8);
  CHECK(family_subsets(Family::e8).size() == 15);
  CHECK(family_subsets(Family::a5).size() == 4);
  CHECK(family_subsets(Family::e6).size() == 8);
  for (Family f : {Family::d4, Family::c3, Family::f4, Family::d6, Family::e7,
                   Family::e8, Family::a5, Family::e6})
    CHECK(family_subsets(f)[0] == 0u);  // empty subset leads
  CHECK(subset_str(0) == "{}");
  CHECK(subset_str(3) == "{1,2}");
  CHECK(subset_str(0b10011000u) == "{4,5,8}");
}

TEST_CASE("scaling constants, spot values") {
  // f4 subsets carry masks: {1,2}=3, {2,3}=6, {1,3}=5, {3,4}=12, full=15.
  CHECK(eps(Family::f4, 3, 3) == rat(-2));
  CHECK(eps(Family::f4, 3, 12) == rat(-2));
  CHECK(eps(Family::f4, 12, 3) == rat(2));
  CHECK(eps(Family::f4, 15, 15) == rat(-1));
  CHECK(eps(Family::f4, 3, 15) == rat(1));
  CHECK(eps(Family::f4, 15, 3) == rat(-1));
  CHECK(eps(Family::f4, 0, 12) == rat(1));
  CHECK(eps(Family::c3, 3, 3) == rat(-2));
  CHECK(eps(Family::c3, 0, 3) == rat(1));
  CHECK(eps(Family::d4, 15, 15) == rat(-1));
  CHECK(eps(Family::d4, 0, 15) == rat(1));
  // Halved diagonals on the weighted families.
  CHECK(eps(Family::a5, 3, 3) == rat(-1));
  CHECK(eps(Family::e6, 3, 3) == rat(-1));
  CHECK(eps(Family::e6, 3, 12) == rat(-1));
  CHECK(eps(Family::e6, 15, 15) == rat(-1));
  CHECK(eps(Family::e6, 3, 15) == rat(1));
  // Unit rows and columns everywhere.
  for (Family f : {Family::f4, Family::e7, Family::d6, Family::e8})
    for (Subset s : family_subsets(f)) {
      CHECK(eps(f, 0, s) == rat(1));
      CHECK(eps(f, s, 0) == rat(1));
    }
  CHECK_THROWS_AS(eps(Family::f4, 1, 3), std::invalid_argument);
}

TEST_CASE("closed formulas reproduce the frozen tables") {
  CheckReport e7 = closed_formula_check(Family::e7);
  CHECK(e7.pass);
  CHECK(e7.checked == 64);
  CheckReport e8 = closed_formula_check(Family::e8);
  CHECK(e8.pass);
  CHECK(e8.checked == 225);
  CheckReport d6 = closed_formula_check(Family::d6);
  CHECK(d6.pass);
  CHECK(d6.checked == 16);
  CheckReport f4 = closed_formula_check(Family::f4);
  CHECK(f4.pass);
  CHECK(f4.checked == 64);
  CHECK_THROWS_AS(closed_formula_check(Family::d4), std::invalid_argument);
  // The case-split formula agrees cell by cell.
  const auto& subs = family_subsets(Family::f4);
  for (Subset s : subs)
    for (Subset t : subs) CHECK(eps_f4_cases(s, t) == eps(Family::f4, s, t));
}

TEST_CASE("antisymmetry compatibility across all families") {
  for (Family f : {Family::d4, Family::c3, Family::f4, Family::d6, Family::e7,
                   Family::e8, Family::a5, Family::e6})
    CHECK(antisymmetry_check(f).pass);
}

TEST_CASE("octonion units multiply by the sign cocycle") {
  const auto& names = octonion_unit_names();
  CHECK(names[0] == "1");
  CHECK(names[1] == "i");
  CHECK(names[2] == "j");
  CHECK(names[3] == "k");
  CHECK(names[4] == "l");
  CHECK(names[5] == "il");
  CHECK(names[6] == "jl");
  CHECK(names[7] == "kl");
  const auto& ref = octonion_reference_table();
  for (unsigned x = 0; x < 8; ++x)
    for (unsigned y = 0; y < 8; ++y) {
      SignedUnit p = octonion_product(x, y);
      CHECK(p.code == (x ^ y));
      CHECK(p.sign == (cocycle_f(x, y) ? -1 : 1));
      CHECK(p.sign == ref[x][y].sign);
      CHECK(p.code == ref[x][y].code);
    }
  CHECK(octonion_product(1, 2).sign == 1);   // i j = k
  CHECK(octonion_product(1, 2).code == 3u);
  CHECK(octonion_product(2, 1).sign == -1);  // j i = -k
  CHECK(octonion_product(1, 1).sign == -1);  // i i = -1
  CHECK(octonion_product(1, 1).code == 0u);
  CHECK(octonion_product(4, 5).sign == 1);   // l (il) = i
  CHECK(octonion_product(4, 5).code == 1u);
  CHECK(octonion_product(5, 6).sign == -1);  // (il)(jl) = -k
  CHECK(octonion_product(5, 6).code == 3u);
}

TEST_CASE("subset coordinates round trip") {
  for (Subset s : family_subsets(Family::e8)) CHECK(chi4(chi4_inverse(s)) == s);
  std::set<Subset> e7_img, d6_img;
  for (unsigned x = 0; x < 8; ++x) e7_img.insert(chi3(x));
  for (unsigned x = 0; x < 4; ++x) d6_img.insert(chi2(x));
  const auto& e7s = family_subsets(Family::e7);
  const auto& d6s = family_subsets(Family::d6);
  CHECK(e7_img == std::set<Subset>(e7s.begin(), e7s.end()));
  CHECK(d6_img == std::set<Subset>(d6s.begin(), d6s.end()));
  CHECK(fano_check().pass);
}

TEST_CASE("e8 table gaps sit exactly at the complementary pairs") {
  const auto& subs = family_subsets(Family::e8);
  int gaps = 0;
  for (int i = 0; i < 15; ++i)
    for (int j = 0; j < 15; ++j) {
      Rational v;
      bool printed = e8_printed_value(i, j, v);
      bool vanishing = subs[i] != 0 && subs[j] == (subs[i] ^ 0xffu);
      CHECK(printed == !vanishing);
      if (!printed) ++gaps;
    }
  CHECK(gaps == 14);
  CHECK_THROWS_AS(
      [] {
        Rational v;
        e8_printed_value(15, 0, v);
      }(),
      std::invalid_argument);
}
