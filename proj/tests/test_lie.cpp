#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <msq/lie.hpp>
#include <msq/tensor_model.hpp>

using namespace msq;

namespace {
const Family kAll[] = {Family::d4, Family::c3, Family::f4, Family::d6,
                       Family::e7, Family::e8, Family::a5, Family::e6};
}

TEST_CASE("assembled tables store the upper triangle only") {
  StructureConstants sc = assemble(build_model(Family::c3));
  CHECK(sc.name == "c3");
  CHECK(sc.dim == 21);
  CHECK((int)sc.labels.size() == 21);
  CHECK((int)sc.degree.size() == 21);
  for (int i = 0; i < sc.dim; ++i) {
    CHECK(sc.bracket(i, i).empty());
    for (int j = i + 1; j < sc.dim; ++j)
      CHECK(sc.bracket(j, i) == -sc.bracket(i, j));
  }
}

TEST_CASE("bracket of sparse combinations is bilinear") {
  StructureConstants sc = assemble(build_model(Family::f4));
  SparseVec x = SparseVec::unit(0, rat(2));
  x.set(7, rat(-1, 3));
  SparseVec y = SparseVec::unit(3, rat(1));
  y.set(40, rat(5));
  SparseVec lhs = sc.bracket_vec(x, y);
  DenseAccum acc(sc.dim);
  for (const auto& [i, a] : x.terms)
    for (const auto& [j, b] : y.terms) sc.bracket_into(acc, a * b, i, j);
  CHECK(lhs == acc.to_sparse());
  CHECK(sc.bracket_vec(y, x) == -lhs);
}

TEST_CASE("adjoint columns agree with the bracket") {
  StructureConstants sc = assemble(build_model(Family::d4));
  std::vector<SparseVec> cols = sc.ad_columns(5);
  REQUIRE((int)cols.size() == sc.dim);
  for (int m = 0; m < sc.dim; ++m) CHECK(cols[m] == sc.bracket(5, m));
}

TEST_CASE("jacobi identity holds exhaustively on every model") {
  for (Family f : kAll) {
    StructureConstants sc = assemble(build_model(f));
    CheckReport r = jacobi_check(sc);
    CHECK(r.pass);
    long n = sc.dim;
    CHECK(r.checked == n * (n - 1) * (n - 2) / 6);
    CHECK(degree_check(sc).pass);
  }
}

TEST_CASE("threaded and sequential scans agree") {
  StructureConstants sc = assemble(build_model(Family::f4));
  CheckReport seq = jacobi_check(sc, 1);
  CheckReport par = jacobi_check(sc, 4);
  CHECK(seq.pass == par.pass);
  CHECK(seq.checked == par.checked);
}

TEST_CASE("sampled jacobi is deterministic in the seed") {
  StructureConstants sc = assemble(build_model(Family::e7));
  CheckReport a = jacobi_sample(sc, 5000, 99);
  CheckReport b = jacobi_sample(sc, 5000, 99);
  CHECK(a.pass);
  CHECK(a.checked == 5000);
  CHECK(b.checked == 5000);
  CHECK(a.witnesses == b.witnesses);
}

TEST_CASE("killing form is nondegenerate and the center vanishes") {
  for (Family f : kAll) {
    StructureConstants sc = assemble(build_model(f));
    Mat k = killing_form(sc);
    CHECK(matrix_rank(k) == sc.dim);
    CHECK(center_basis(sc).empty());
    // Symmetry spot checks on the dense form.
    CHECK(k[0][1] == k[1][0]);
    CHECK(k[2][5] == k[5][2]);
  }
}

TEST_CASE("the algebras are perfect") {
  for (Family f : {Family::d4, Family::c3, Family::f4, Family::a5}) {
    StructureConstants sc = assemble(build_model(f));
    CHECK(derived_rank(sc) == sc.dim);
  }
}

TEST_CASE("wrong weighted profile breaks jacobi, the frozen one is clean") {
  TensorModel bad =
      build_extended_model(Family::e6, {rat(-1, 2), rat(-1, 2), rat(-1)});
  StructureConstants bsc = assemble(bad);
  CheckReport rb = jacobi_check(bsc, 0, true);
  CHECK_FALSE(rb.pass);
  CHECK(!rb.witnesses.empty());
  TensorModel good =
      build_extended_model(Family::e6, {rat(-1, 2), rat(-1, 2), rat(1)});
  StructureConstants gsc = assemble(good);
  CHECK(jacobi_check(gsc).pass);
  // The correction also matters for a5.
  TensorModel bad5 =
      build_extended_model(Family::a5, {rat(-1, 2), rat(-1, 2), rat(-1)});
  CHECK_FALSE(jacobi_check(assemble(bad5), 0, true).pass);
}

TEST_CASE("mutated scaling constants are caught by the scan") {
  StructureConstants sc = assemble(build_model(Family::f4));
  // Negate the block pair ({1,2}, {2,3}); masks 3 and 6.
  BracketFn mut = [&sc](DenseAccum& acc, const Rational& c, int i, int j) {
    unsigned a = sc.degree[i], b = sc.degree[j];
    bool flip = (a == 3u && b == 6u) || (a == 6u && b == 3u);
    sc.bracket_into(acc, flip ? -c : c, i, j);
  };
  CheckReport r = jacobi_scan(sc.dim, sc.labels, mut, 0, true);
  CHECK_FALSE(r.pass);
  // The unmutated bracket through the same path stays clean.
  BracketFn plain = [&sc](DenseAccum& acc, const Rational& c, int i, int j) {
    sc.bracket_into(acc, c, i, j);
  };
  CHECK(jacobi_scan(sc.dim, sc.labels, plain).pass);
}
