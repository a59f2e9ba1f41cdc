#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <msq/lie.hpp>
#include <msq/roots.hpp>
#include <msq/tensor_model.hpp>

#include <algorithm>
#include <set>

using namespace msq;

namespace {

std::vector<Rational> rv(std::initializer_list<int> v) {
  std::vector<Rational> r;
  for (int x : v) r.push_back(rat(x));
  return r;
}

// Frozen simple roots of the e8 model under the frozen basis order,
// numbered so that the Cartan matrix comes out in its textbook form.
std::vector<std::vector<Rational>> e8_simple_roots() {
  return {rv({-1, 0, 0, -1, 0, -1, 1, 0}), rv({0, 2, 0, 0, 0, 0, 0, 0}),
          rv({2, 0, 0, 0, 0, 0, 0, 0}),    rv({-1, -1, -1, 1, 0, 0, 0, 0}),
          rv({0, 0, 2, 0, 0, 0, 0, 0}),    rv({0, 0, -1, -1, -1, 1, 0, 0}),
          rv({0, 0, 0, 0, 2, 0, 0, 0}),    rv({0, 0, 0, 0, -1, -1, -1, 1})};
}

const int kE8Cartan[8][8] = {
    {2, 0, -1, 0, 0, 0, 0, 0},  {0, 2, 0, -1, 0, 0, 0, 0},
    {-1, 0, 2, -1, 0, 0, 0, 0}, {0, -1, -1, 2, -1, 0, 0, 0},
    {0, 0, 0, -1, 2, -1, 0, 0}, {0, 0, 0, 0, -1, 2, -1, 0},
    {0, 0, 0, 0, 0, -1, 2, -1}, {0, 0, 0, 0, 0, 0, -1, 2}};

const int kE7Cartan[7][7] = {
    {2, 0, -1, 0, 0, 0, 0},  {0, 2, 0, -1, 0, 0, 0}, {-1, 0, 2, -1, 0, 0, 0},
    {0, -1, -1, 2, -1, 0, 0}, {0, 0, 0, -1, 2, -1, 0}, {0, 0, 0, 0, -1, 2, -1},
    {0, 0, 0, 0, 0, -1, 2}};

struct Expected {
  Family fam;
  long roots;
  int rank;
};

const Expected kCounts[] = {{Family::d4, 24, 4}, {Family::c3, 18, 3},
                            {Family::f4, 48, 4}, {Family::d6, 60, 6},
                            {Family::e7, 126, 7}, {Family::e8, 240, 8},
                            {Family::a5, 30, 5}, {Family::e6, 72, 6}};

}  // namespace

TEST_CASE("root counts, ranks and negation symmetry") {
  for (const Expected& w : kCounts) {
    TensorModel m = build_model(w.fam);
    StructureConstants sc = assemble(m);
    RootDatum rd = root_datum(m, sc);
    CHECK(rd.rank() == w.rank);
    CHECK(rd.root_count() == w.roots);
    const WeightSpace* zero = rd.zero_space();
    REQUIRE(zero != nullptr);
    CHECK((long)zero->members.size() == sc.dim - w.roots);
    CHECK((int)zero->members.size() == w.rank);
    std::vector<std::vector<Rational>> vecs = rd.root_vectors();
    CHECK((long)vecs.size() == w.roots);
    std::set<std::vector<Rational>> all(vecs.begin(), vecs.end());
    for (const auto& v : vecs) {
      std::vector<Rational> neg;
      for (const auto& c : v) neg.push_back(-c);
      CHECK(all.count(neg) == 1);
    }
  }
}

TEST_CASE("e8 root shapes") {
  TensorModel m = build_model(Family::e8);
  StructureConstants sc = assemble(m);
  RootDatum rd = root_datum(m, sc);
  RootCensus census = classify_roots(rd);
  CHECK(census.sp_like == 16);
  CHECK(census.pattern_like == 224);
  CHECK(census.other == 0);
  // The mixed roots sit over exactly fourteen 4-element coordinate sets.
  std::set<std::vector<int>> supports;
  for (const auto& v : rd.root_vectors()) {
    std::vector<int> sup;
    for (int i = 0; i < 8; ++i)
      if (v[i] != 0) sup.push_back(i);
    if (sup.size() > 1) {
      CHECK(sup.size() == 4);
      supports.insert(sup);
    }
  }
  CHECK(supports.size() == 14);
}

TEST_CASE("e8 simple roots and cartan matrix") {
  TensorModel m = build_model(Family::e8);
  StructureConstants sc = assemble(m);
  RootDatum rd = root_datum(m, sc);
  std::vector<std::vector<Rational>> frozen = e8_simple_roots();
  std::vector<std::vector<Rational>> sorted_frozen = frozen;
  std::sort(sorted_frozen.begin(), sorted_frozen.end());
  CHECK(simple_roots(rd) == sorted_frozen);
  Mat k = killing_form(sc);
  std::vector<std::vector<Rational>> cm = cartan_matrix(rd, k, frozen);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) CHECK(cm[i][j] == rat(kE8Cartan[i][j]));
}

TEST_CASE("dropping the last coordinate of e8 leaves the e7 system") {
  TensorModel m8 = build_model(Family::e8);
  StructureConstants sc8 = assemble(m8);
  RootDatum rd8 = root_datum(m8, sc8);
  std::set<std::vector<Rational>> shaved;
  long count = 0;
  for (const auto& v : rd8.root_vectors())
    if (v[7] == 0) {
      ++count;
      shaved.insert(std::vector<Rational>(v.begin(), v.end() - 1));
    }
  CHECK(count == 126);
  TensorModel m7 = build_model(Family::e7);
  StructureConstants sc7 = assemble(m7);
  RootDatum rd7 = root_datum(m7, sc7);
  std::vector<std::vector<Rational>> own = rd7.root_vectors();
  CHECK(shaved == std::set<std::vector<Rational>>(own.begin(), own.end()));
}

TEST_CASE("e7 simple roots and cartan matrix") {
  TensorModel m = build_model(Family::e7);
  StructureConstants sc = assemble(m);
  RootDatum rd = root_datum(m, sc);
  std::vector<std::vector<Rational>> frozen;
  std::vector<std::vector<Rational>> eight = e8_simple_roots();
  for (int i = 0; i < 7; ++i)
    frozen.emplace_back(eight[i].begin(), eight[i].end() - 1);
  std::vector<std::vector<Rational>> sorted_frozen = frozen;
  std::sort(sorted_frozen.begin(), sorted_frozen.end());
  CHECK(simple_roots(rd) == sorted_frozen);
  Mat k = killing_form(sc);
  std::vector<std::vector<Rational>> cm = cartan_matrix(rd, k, frozen);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) CHECK(cm[i][j] == rat(kE7Cartan[i][j]));
}

TEST_CASE("cartan elements act diagonally with small eigenvalues") {
  TensorModel m = build_model(Family::f4);
  StructureConstants sc = assemble(m);
  RootDatum rd = root_datum(m, sc);
  for (const WeightSpace& ws : rd.spaces)
    for (const Rational& c : ws.weight) {
      CHECK(c.get_den() == 1);
      CHECK(c >= rat(-2));
      CHECK(c <= rat(2));
    }
}
