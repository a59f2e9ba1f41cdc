#pragma once

#include <msq/comp_alg.hpp>
#include <msq/dense.hpp>
#include <msq/report.hpp>
#include <msq/sign_tables.hpp>
#include <msq/sparse.hpp>

#include <array>
#include <string>
#include <vector>

namespace msq {

// Graded model built from one symplectic plane per slot: degree zero is one
// sp(V) summand per slot (basis e, h, f), the other degrees are tensor
// blocks V(sigma) with a {v,w}-pattern basis. The a5/e6 variants extend
// degree zero by a small torus and tensor every proper block with a weight
// line spanned by e^+ and e^-.
struct TensorModel {
  Family fam = Family::d4;
  std::vector<int> slots;       // ascending physical slot numbers
  std::vector<Subset> subsets;  // grading subsets, family order, [0] empty
  bool extended = false;        // torus and weight lines present
  // Profile vectors (alpha0, alpha1, alpha2) produced by same-subset
  // brackets, one per index class of 2-subsets.
  std::array<std::array<Rational, 3>, 3> profile{};
  // Torus basis, each element stored by its action triple. The first two
  // are (1,0,-1) and (0,1,-1); a third appears only when the class-2
  // profile escapes the sum-zero plane they span.
  std::vector<std::array<Rational, 3>> torus;
  // Coordinates of each class profile in the torus basis.
  std::array<SparseVec, 3> profile_coords;

  int dim = 0;
  std::vector<int> offset;  // block start per subset position
  std::vector<int> block;   // block size per subset position
  std::vector<std::string> labels;

  int n_slots() const { return (int)slots.size(); }
  int slot_pos(int slot) const;           // position in slots, -1 if absent
  int sp_index(int slot, int gen) const;  // gen: 0 = e, 1 = h, 2 = f
  int torus_index(int t) const;
  int tensor_index(int subset_pos, unsigned pattern, int esign = 0) const;
  // True when the block carries a weight-line factor (extended models,
  // proper nonempty subsets).
  bool weighted_block(int subset_pos) const;

  struct BasisRef {
    int subset_pos = 0;
    int slot = -1, gen = -1;  // sp generator when slot >= 0
    int torus = -1;           // torus coordinate when >= 0
    unsigned pattern = 0;     // tensor blocks
    int esign = 0;            // 0 = e^+, 1 = e^-
  };
  BasisRef decode(int index) const;
};

TensorModel build_model(Family fam);
// The a5/e6 builder with an explicit class-2 profile vector; build_model
// passes (-1/2, -1/2, 1), the value that closes the Jacobi identity.
TensorModel build_extended_model(Family fam,
                                 const std::array<Rational, 3>& class2);

// Index class of a 2-subset of {1,..,4}: {1,2}/{3,4} -> 0,
// {2,3}/{1,4} -> 1, {1,3}/{2,4} -> 2.
int iota_class(Subset sigma);

// Bracket of two model basis elements in model coordinates. Works for any
// index order; [i, i] is zero.
SparseVec model_bracket(const TensorModel& m, int i, int j);
// Bilinear extension to sparse combinations of basis elements.
SparseVec model_bracket_vec(const TensorModel& m, const SparseVec& x,
                            const SparseVec& y);

// Contraction of two pure patterns over distinct nonempty subsets:
// coefficient is the product of the symplectic pairings over the shared
// slots (first argument's factor on the left), the pattern lives on the
// symmetric difference with each surviving factor keeping its owner's
// letter. Returns coeff 0 if every shared-slot pairing vanishes.
struct PatternProduct {
  Rational coeff;
  unsigned pattern = 0;
};
PatternProduct phi_contract(Subset sigma, unsigned px, Subset tau,
                            unsigned py);

// Same-subset case: -1/2 sum over slots of (product of the other slots'
// pairings) gamma at that slot, reported as (slot, gen, coeff) triples in
// the (e,h,f) basis.
struct SpTerm {
  int slot;
  int gen;
  Rational coeff;
};
std::vector<SpTerm> phi_same(Subset sigma, unsigned px, unsigned py);

// ----- the 28-dimensional model and its order-3 symmetry -----

// Basis permutation cycling slots 1 -> 2 -> 3 -> 1 (components and tensor
// factors alike), fixing slot 4.
int theta_d4(const TensorModel& m, int index);
// Action of a model basis element on the eight-dimensional twisted algebra
// in octonion coordinates (vv0..ww1); shift i first applies the inverse
// symmetry i times.
Mat rho_matrix(const TensorModel& m, int index, int shift);

// theta is an automorphism of order 3: checked on all basis pairs.
CheckReport theta_automorphism_check();
// rho is a representation: [rho(f), rho(g)] = rho([f,g]) on all pairs.
CheckReport rho_homomorphism_check();
// rho(f)(x.y) = rho(theta^-1 f)(x).y + x.rho(theta^-2 f)(y) over all 28
// basis elements and 64 octonion basis pairs.
CheckReport local_triality_check();
// The triples (rho_0 f, rho_1 f, rho_2 f) lie in the octonions'
// related-triple algebra and span it (28 = full dimension).
CheckReport rho_triality_span_check();
// The same triples for sp generators of the first three slots, restricted
// to the first tensor block, span the quaternions' related-triple algebra.
CheckReport quaternion_triality_span_check();
// The fixed subalgebra of the symmetry: dimension 14, closed under the
// bracket.
CheckReport fixed_subalgebra_check();

}  // namespace msq
