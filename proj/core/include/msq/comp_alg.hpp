#pragma once

#include <msq/dense.hpp>
#include <msq/report.hpp>
#include <msq/sparse.hpp>

#include <array>
#include <string>
#include <vector>

namespace msq {

// Finite-dimensional algebra carrying a nondegenerate symmetric bilinear
// form whose quadratic form is multiplicative under the product. The form
// is stored as its polar Gram matrix, so the quadratic form of a basis
// vector is half the diagonal entry.
struct CompAlg {
  std::string name;
  int dim = 0;
  std::vector<std::string> labels;     // one per basis vector
  Mat gram;                            // polar form on basis pairs
  std::vector<std::vector<Vec>> mult;  // mult[i][j] = coords of b_i b_j
  // Unital algebras store the coordinates of the unit; the twisted ones
  // keep the same element, which survives as a distinguished idempotent.
  Vec unit;
  bool unital = false;

  Vec basis_vec(int i) const;
  Vec product(const Vec& x, const Vec& y) const;
  Rational polar(const Vec& x, const Vec& y) const;
  Rational quad(const Vec& x) const;  // polar(x,x)/2
  Mat left_mult(const Vec& x) const;  // z -> x z
  Mat right_mult(const Vec& x) const; // z -> z x
  // q(x, unit) unit - x; only meaningful on a unital algebra.
  Vec conjugate(const Vec& x) const;
};

// The four split algebras the construction is fed with, in their unital
// form, plus the twists that make the form associative.
CompAlg ground_field();                         // F, dim 1, q(1) = 1
CompAlg split_binarions();                      // F x F with the swap form
CompAlg split_quaternions();                    // rank-one tensors on a
                                                // symplectic plane
CompAlg cayley_dickson_double(const CompAlg& a);
CompAlg para_hurwitz(const CompAlg& a);         // x . y = conj(x) conj(y)
CompAlg split_octonions();                      // the doubled quaternions,
                                                // already twisted

// The twisted algebra of the given dimension (1, 2, 4 or 8), renamed
// "S<dim>". These are the inputs the two-algebra construction consumes.
CompAlg symmetric_composition(int dim);

// Multiplicativity of the form, fully linearized over basis 4-tuples,
// plus Gram nondegeneracy (and the unit laws when the algebra is unital).
CheckReport check_composition(const CompAlg& a);
// Associativity of the form q(xy, z) = q(x, yz) and the linearized
// two-sided cancellation laws (xy)z + (zy)x = q(x,z) y = x(yz) + z(yx).
CheckReport check_symmetric(const CompAlg& a);

// z -> q(x,z) y - q(y,z) x, a skew map of the form.
Mat sigma_op(const CompAlg& a, const Vec& x, const Vec& y);

// Basis of the skew maps of the form, kernel of D^T G + G D = 0, in
// canonical reduced echelon order under row-major flattening.
std::vector<Mat> orth_basis(const CompAlg& a);

// Triple of operators (d0, d1, d2), each a dim x dim matrix.
struct TriElement {
  std::array<Mat, 3> d;
};

TriElement tri_zero(int n);
TriElement tri_add(const TriElement& a, const TriElement& b);
TriElement tri_scale(const Rational& c, const TriElement& a);
TriElement tri_commutator(const TriElement& a, const TriElement& b);
// Cyclic component shift (d0,d1,d2) -> (d2,d0,d1).
TriElement tri_shift(const TriElement& a);
bool tri_is_zero(const TriElement& a);
bool tri_equal(const TriElement& a, const TriElement& b);

// (sigma_{x,y}, q(x,y)/2 - r_x l_y, q(x,y)/2 - l_x r_y); lies in the
// related-triple algebra and spans it as x, y run over the algebra.
TriElement t_element(const CompAlg& a, const Vec& x, const Vec& y);

// The algebra of related triples: (d0,d1,d2) with every component skew for
// the form and d0(xy) = d1(x)y + x d2(y). Basis is the canonical reduced
// echelon kernel under component-major flattening, which makes coordinate
// extraction a pivot lookup.
struct TrialityBasis {
  int n = 0;                     // dimension of the underlying algebra
  std::vector<TriElement> elems;
  std::vector<SparseVec> flat;   // same elements flattened, echelon order
  std::vector<int> pivot;        // leading flat index of each element

  int dim() const { return (int)elems.size(); }
  SparseVec flatten(const TriElement& t) const;
  TriElement unflatten(const SparseVec& v) const;
  // Coordinates in this basis; throws std::runtime_error if t is outside
  // the span.
  std::vector<Rational> coords(const TriElement& t) const;
};

TrialityBasis triality_algebra(const CompAlg& a);

}  // namespace msq
