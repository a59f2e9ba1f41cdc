#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <msq/comp_alg.hpp>
#include <msq/sparse.hpp>

using namespace msq;

TEST_CASE("split unital algebras compose but only dim 1 has an associative form") {
  CompAlg f = ground_field();
  CHECK(f.dim == 1);
  CHECK(check_composition(f).pass);
  CHECK(check_symmetric(f).pass);
  for (CompAlg a : {split_binarions(), split_quaternions(),
                    cayley_dickson_double(split_quaternions())}) {
    CHECK(check_composition(a).pass);
    CHECK(a.unital);
    CHECK_FALSE(check_symmetric(a).pass);
  }
}

TEST_CASE("para twists restore form associativity") {
  for (int d : {2, 4, 8}) {
    CompAlg s = symmetric_composition(d);
    CHECK(s.dim == d);
    CHECK(check_composition(s).pass);
    CHECK(check_symmetric(s).pass);
    CHECK_FALSE(s.unital);
  }
  CompAlg s1 = symmetric_composition(1);
  CHECK(s1.dim == 1);
  CHECK(check_symmetric(s1).pass);
  // The one-dimensional form has q(1,1) = 2 in polar coordinates.
  CHECK(s1.polar(s1.basis_vec(0), s1.basis_vec(0)) == rat(2));
}

TEST_CASE("conjugation and unit laws on the quaternions") {
  CompAlg q = split_quaternions();
  Vec one = q.unit;
  for (int i = 0; i < q.dim; ++i) {
    Vec b = q.basis_vec(i);
    CHECK(q.product(one, b) == b);
    CHECK(q.product(b, one) == b);
    // x conj(x) = q(x) 1 for basis vectors.
    Vec n = q.product(b, q.conjugate(b));
    CHECK(n == vec_scale(q.quad(b), one));
  }
}

TEST_CASE("skew maps of the split forms have the orthogonal dimension") {
  CHECK((int)orth_basis(symmetric_composition(1)).size() == 0);
  CHECK((int)orth_basis(symmetric_composition(2)).size() == 1);
  CHECK((int)orth_basis(symmetric_composition(4)).size() == 6);
  CHECK((int)orth_basis(symmetric_composition(8)).size() == 28);
}

TEST_CASE("triality algebra dimensions") {
  CHECK(triality_algebra(symmetric_composition(1)).dim() == 0);
  CHECK(triality_algebra(symmetric_composition(2)).dim() == 2);
  CHECK(triality_algebra(symmetric_composition(4)).dim() == 9);
  CHECK(triality_algebra(symmetric_composition(8)).dim() == 28);
}

TEST_CASE("two-generated elements span the triality algebra of the octonions") {
  CompAlg s = symmetric_composition(8);
  TrialityBasis tri = triality_algebra(s);
  RowReducer span((size_t)3 * 8 * 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      span.insert(tri.flatten(t_element(s, s.basis_vec(i), s.basis_vec(j))));
  CHECK(span.rank() == tri.dim());
  // Membership both ways: each generator has coordinates in the basis.
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      CHECK_NOTHROW(tri.coords(t_element(s, s.basis_vec(i), s.basis_vec(j))));
}

TEST_CASE("component shift is an automorphism of the triality algebra") {
  CompAlg s = symmetric_composition(8);
  TrialityBasis tri = triality_algebra(s);
  for (int a = 0; a < tri.dim(); a += 5)
    for (int b = a + 1; b < tri.dim(); b += 7) {
      TriElement lhs = tri_shift(tri_commutator(tri.elems[a], tri.elems[b]));
      TriElement rhs =
          tri_commutator(tri_shift(tri.elems[a]), tri_shift(tri.elems[b]));
      CHECK(tri_equal(lhs, rhs));
      CHECK_NOTHROW(tri.coords(tri_shift(tri.elems[a])));
    }
}

TEST_CASE("flatten and unflatten are inverse on the triality basis") {
  CompAlg s = symmetric_composition(4);
  TrialityBasis tri = triality_algebra(s);
  for (int a = 0; a < tri.dim(); ++a) {
    SparseVec fl = tri.flatten(tri.elems[a]);
    CHECK(tri_equal(tri.unflatten(fl), tri.elems[a]));
    std::vector<Rational> co = tri.coords(tri.elems[a]);
    for (int b = 0; b < tri.dim(); ++b)
      CHECK(co[b] == (a == b ? rat(1) : rat(0)));
  }
}
