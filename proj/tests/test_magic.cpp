#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <msq/comp_alg.hpp>
#include <msq/lie.hpp>
#include <msq/magic.hpp>
#include <msq/tensor_model.hpp>

using namespace msq;

namespace {
const int kDims[4] = {1, 2, 4, 8};
const int kSquare[4][4] = {{3, 8, 21, 52},
                           {8, 16, 35, 78},
                           {21, 35, 66, 133},
                           {52, 78, 133, 248}};
}

TEST_CASE("all sixteen pairs hit the frozen dimension grid") {
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      MagicAlgebra g = build_magic(kDims[r], kDims[c]);
      CHECK(g.sc.dim == kSquare[r][c]);
      CHECK(g.sc.dim == g.triS.dim() + g.triSp.dim() +
                            3 * g.S.dim * g.Sp.dim);
    }
}

TEST_CASE("every built algebra is graded and jacobi clean") {
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      StructureConstants sc = build_g(symmetric_composition(kDims[r]),
                                      symmetric_composition(kDims[c]));
      CHECK(degree_check(sc).pass);
      CHECK(jacobi_check(sc).pass);
    }
}

TEST_CASE("unital inputs are rejected") {
  CHECK_THROWS_AS(build_magic(split_quaternions(), symmetric_composition(1)),
                  NotSymmetricComposition);
  CHECK_THROWS_AS(
      build_magic(symmetric_composition(4),
                  cayley_dickson_double(split_quaternions())),
      NotSymmetricComposition);
}

TEST_CASE("basis index helpers address the declared blocks") {
  MagicAlgebra g = build_magic(2, 4);
  CHECK(g.tri_index(0) == 0);
  CHECK(g.trip_index(0) == g.triS.dim());
  CHECK(g.iota_index(0, 0, 0) == g.triS.dim() + g.triSp.dim());
  CHECK(g.iota_index(2, g.S.dim - 1, g.Sp.dim - 1) == g.sc.dim - 1);
  // Copy blocks bracket into the next copy: degree grading by xor.
  int i0 = g.iota_index(0, 0, 0), i1 = g.iota_index(1, 0, 1);
  SparseVec out = g.sc.bracket(i0, i1);
  for (const auto& [k, c] : out.terms)
    CHECK(g.sc.degree[k] == (g.sc.degree[i0] ^ g.sc.degree[i1]));
}

TEST_CASE("cycling the copies is an automorphism") {
  CHECK(copy_shift_automorphism_check(build_magic(4, 4)).pass);
  CHECK(copy_shift_automorphism_check(build_magic(8, 1)).pass);
  CHECK(copy_shift_automorphism_check(build_magic(2, 8)).pass);
}

TEST_CASE("weight decomposition of the octonion-by-one pair") {
  MagicAlgebra g = build_magic(8, 1);
  MagicRoots mr = magic_roots(g);
  CHECK(mr.complete);
  CHECK(mr.root_count() == 48);
  CHECK((int)mr.cartan.size() == 4);
}

TEST_CASE("cross validation against the matching models") {
  struct Pair {
    int ds, dsp;
    Family fam;
  };
  for (const Pair& p : {Pair{8, 1, Family::f4}, Pair{2, 4, Family::a5},
                        Pair{4, 4, Family::d6}, Pair{8, 8, Family::e8}}) {
    MagicAlgebra g = build_magic(p.ds, p.dsp);
    TensorModel tm = build_model(p.fam);
    StructureConstants tsc = assemble(tm);
    CrossReport cr = cross_validate(g, tm, tsc);
    CHECK(cr.pass);
    CHECK(cr.dim_magic == cr.dim_tensor);
    CHECK(cr.killing_rank_magic == cr.killing_rank_tensor);
    if (cr.root_comparison) {
      CHECK(cr.roots_match);
      CHECK(cr.roots_magic == cr.roots_tensor);
    }
  }
}

TEST_CASE("dimension grid is symmetric") {
  for (int r = 0; r < 4; ++r)
    for (int c = r + 1; c < 4; ++c)
      CHECK(build_magic(kDims[r], kDims[c]).sc.dim ==
            build_magic(kDims[c], kDims[r]).sc.dim);
}
