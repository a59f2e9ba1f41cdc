#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <msq/lie.hpp>
#include <msq/tensor_model.hpp>

#include <numeric>

using namespace msq;

namespace {
const Family kAll[] = {Family::d4, Family::c3, Family::f4, Family::d6,
                       Family::e7, Family::e8, Family::a5, Family::e6};
}

TEST_CASE("model dimensions") {
  CHECK(build_model(Family::d4).dim == 28);
  CHECK(build_model(Family::c3).dim == 21);
  CHECK(build_model(Family::f4).dim == 52);
  CHECK(build_model(Family::d6).dim == 66);
  CHECK(build_model(Family::e7).dim == 133);
  CHECK(build_model(Family::e8).dim == 248);
  CHECK(build_model(Family::a5).dim == 35);
  CHECK(build_model(Family::e6).dim == 78);
}

TEST_CASE("block layout is consistent") {
  for (Family f : kAll) {
    TensorModel m = build_model(f);
    CHECK(m.subsets[0] == 0u);
    CHECK((int)m.labels.size() == m.dim);
    REQUIRE(m.offset.size() == m.subsets.size());
    REQUIRE(m.block.size() == m.subsets.size());
    CHECK(m.offset[0] == 0);
    for (size_t p = 1; p < m.subsets.size(); ++p)
      CHECK(m.offset[p] == m.offset[p - 1] + m.block[p - 1]);
    CHECK(m.offset.back() + m.block.back() == m.dim);
    for (int i = 0; i < m.dim; ++i) {
      TensorModel::BasisRef r = m.decode(i);
      CHECK(r.subset_pos >= 0);
      CHECK(r.subset_pos < (int)m.subsets.size());
    }
  }
}

TEST_CASE("symplectic generators and labels") {
  TensorModel m = build_model(Family::c3);
  CHECK(m.labels[0] == "e1");
  CHECK(m.labels[1] == "h1");
  CHECK(m.labels[2] == "f1");
  CHECK(m.sp_index(1, 0) == 0);
  CHECK(m.sp_index(1, 1) == 1);
  CHECK(m.sp_index(1, 2) == 2);
  CHECK(m.sp_index(2, 0) == 3);
  // sl2 relations inside one slot: [e,f] = h, [h,e] = 2e, [h,f] = -2f.
  int e = m.sp_index(1, 0), h = m.sp_index(1, 1), f = m.sp_index(1, 2);
  CHECK(model_bracket(m, e, f) == SparseVec::unit(h, rat(1)));
  CHECK(model_bracket(m, h, e) == SparseVec::unit(e, rat(2)));
  CHECK(model_bracket(m, h, f) == SparseVec::unit(f, rat(-2)));
  CHECK(model_bracket(m, f, e) == SparseVec::unit(h, rat(-1)));
  CHECK(model_bracket(m, e, e).empty());
}

TEST_CASE("two-subset index classes") {
  CHECK(iota_class(0b0011u) == 0);  // {1,2}
  CHECK(iota_class(0b1100u) == 0);  // {3,4}
  CHECK(iota_class(0b0110u) == 1);  // {2,3}
  CHECK(iota_class(0b1001u) == 1);  // {1,4}
  CHECK(iota_class(0b0101u) == 2);  // {1,3}
  CHECK(iota_class(0b1010u) == 2);  // {2,4}
}

TEST_CASE("weighted models carry a two-dimensional torus") {
  for (Family f : {Family::a5, Family::e6}) {
    TensorModel m = build_model(f);
    CHECK(m.extended);
    CHECK(m.torus.size() == 2);
    // Both torus elements act by weights summing to zero.
    for (const auto& t : m.torus) CHECK(t[0] + t[1] + t[2] == rat(0));
  }
  for (Family f : {Family::d4, Family::c3, Family::f4, Family::d6, Family::e7,
                   Family::e8})
    CHECK_FALSE(build_model(f).extended);
}

TEST_CASE("weight lines sit on proper nonempty subsets only") {
  TensorModel m = build_model(Family::e6);
  for (size_t p = 0; p < m.subsets.size(); ++p) {
    bool proper = m.subsets[p] != 0 && m.subsets[p] != 0b1111u;
    CHECK(m.weighted_block((int)p) == proper);
  }
}

TEST_CASE("bracket is antisymmetric on every model") {
  for (Family f : kAll) CHECK(model_antisymmetry_check(build_model(f)).pass);
}

TEST_CASE("tensor blocks pair into the symmetric difference") {
  TensorModel m = build_model(Family::f4);
  // Pattern 0 of {1,2} times pattern 0 of {3,4} lands in the full block.
  int i = m.tensor_index(1, 0);
  size_t full_pos = 0;
  for (size_t p = 0; p < m.subsets.size(); ++p)
    if (m.subsets[p] == 0b1111u) full_pos = p;
  size_t p34 = 0;
  for (size_t p = 0; p < m.subsets.size(); ++p)
    if (m.subsets[p] == 0b1100u) p34 = p;
  int j = m.tensor_index((int)p34, 0);
  SparseVec out = model_bracket(m, i, j);
  REQUIRE(!out.empty());
  for (const auto& [k, c] : out.terms) {
    TensorModel::BasisRef r = m.decode(k);
    CHECK(m.subsets[r.subset_pos] == 0b1111u);
  }
  CHECK(full_pos > 0);
}
