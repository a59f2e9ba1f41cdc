#pragma once

#include <msq/comp_alg.hpp>
#include <msq/lie.hpp>
#include <msq/report.hpp>
#include <msq/sparse.hpp>
#include <msq/tensor_model.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace msq {

struct NotSymmetricComposition : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The two-algebra construction: the triple algebras of both inputs act on
// three copies of the tensor product, and two elements of the same copy
// multiply back into the triple algebras. Basis order: triple algebra of S,
// triple algebra of S', then copies 0, 1, 2 of S (x) S' in row-major basis
// pairs. The table is graded by the Klein four-group: triple parts sit in
// degree 0 and copy i in degree i+1, composing by xor.
struct MagicAlgebra {
  CompAlg S, Sp;
  TrialityBasis triS, triSp;
  StructureConstants sc;

  int tri_index(int k) const { return k; }
  int trip_index(int k) const { return triS.dim() + k; }
  int iota_index(int copy, int p, int q) const {
    return triS.dim() + triSp.dim() + (copy * S.dim + p) * Sp.dim + q;
  }
};

// Builds the algebra from two symmetric composition algebras. Throws
// NotSymmetricComposition unless both inputs pass the multiplicativity and
// form-associativity checks.
MagicAlgebra build_magic(const CompAlg& S, const CompAlg& Sp);
// Convenience: feeds the split symmetric composition algebras of the given
// dimensions (1, 2, 4 or 8).
MagicAlgebra build_magic(int dim_s, int dim_sp);

// Structure constants only; same construction.
StructureConstants build_g(const CompAlg& S, const CompAlg& Sp);

// The map sending copy i to copy i+1 and cyclically shifting the components
// of both triple algebras is a Lie automorphism; verified on every basis
// pair.
CheckReport copy_shift_automorphism_check(const MagicAlgebra& g);

// Weight-space decomposition with respect to a commuting family of
// triple-algebra elements whose components are all diagonal on the standard
// bases: per dim-8 or dim-4 factor, the slot generators transported through
// the triality representation; per dim-2 factor, the whole two-dimensional
// triple algebra. A dim-1 factor contributes nothing.
struct MagicRoots {
  bool complete = false;          // eigen decomposition exhausted the space
  std::vector<SparseVec> cartan;  // the commuting family, algebra coords
  struct Space {
    std::vector<Rational> weight;
    int dim = 0;
  };
  std::vector<Space> spaces;
  long root_count() const;  // total dimension of nonzero-weight spaces
};
MagicRoots magic_roots(const MagicAlgebra& g);

// Comparison of a magic-built algebra against the matching tensor model:
// dimension, Killing rank, and the root systems matched through the
// basis-independent pairing profiles each side induces on its own roots.
// When the magic-side eigen decomposition is incomplete the comparison
// degrades to derived rank plus center dimension and says so in the notes.
struct CrossReport {
  int dim_magic = 0, dim_tensor = 0;
  int killing_rank_magic = -1, killing_rank_tensor = -1;
  bool root_comparison = false;
  long roots_magic = -1, roots_tensor = -1;
  bool roots_match = false;
  int derived_magic = -1, derived_tensor = -1;
  int center_magic = -1, center_tensor = -1;
  bool pass = false;
  std::vector<std::string> notes;
};
CrossReport cross_validate(const MagicAlgebra& g, const TensorModel& tm,
                           const StructureConstants& tensor);

}  // namespace msq
