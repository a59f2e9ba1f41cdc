#pragma once

#include <msq/report.hpp>
#include <msq/sparse.hpp>
#include <msq/tensor_model.hpp>

#include <functional>
#include <string>
#include <vector>

namespace msq {

// Antisymmetric structure-constants table over Rational. Brackets are
// stored for index pairs i < j only; the other orders follow by sign.
// `degree` carries the grading group element of each basis vector (packed
// in an unsigned, composing by xor); every stored bracket is checked
// against it by degree_check, and the Killing computation uses it to skip
// block pairs whose product trace vanishes for grading reasons.
struct StructureConstants {
  std::string name;
  int dim = 0;
  std::vector<std::string> labels;
  std::vector<unsigned> degree;
  std::vector<SparseVec> table;  // index i * dim + j, filled for i < j

  const SparseVec& upper(int i, int j) const { return table[i * dim + j]; }
  SparseVec bracket(int i, int j) const;  // any order; [i,i] = 0

  // acc += c * [e_i, e_j] without materializing a copy.
  template <class Acc>
  void bracket_into(Acc& acc, const Rational& c, int i, int j) const {
    if (i == j) return;
    if (i < j) {
      acc.axpy(c, upper(i, j));
    } else {
      acc.axpy(-c, upper(j, i));
    }
  }

  SparseVec bracket_vec(const SparseVec& x, const SparseVec& y) const;
  // Columns of ad(e_i): column m holds [e_i, e_m].
  std::vector<SparseVec> ad_columns(int i) const;
};

// Builds the table of a graded model; degree is the grading subset mask.
StructureConstants assemble(const TensorModel& m);

// Thread count resolution: explicit request wins, then the MSQ_THREADS
// environment variable, then the hardware concurrency (at least 1).
int resolve_threads(int requested);

// Exhaustive Jacobi scan over basis triples i < j < k. stop_at_first makes
// mutation runs cheap; a full scan reports every violating triple (witness
// list capped) in deterministic order.
CheckReport jacobi_check(const StructureConstants& sc, int threads = 0,
                         bool stop_at_first = false);

// Jacobi on seeded random triples, drawn sequentially so the stream
// depends only on the seed. Quick spot check next to the exhaustive scan.
CheckReport jacobi_sample(const StructureConstants& sc, long samples,
                          unsigned long long seed);

// Jacobi scan over an arbitrary bracket function (acc += c * [e_i, e_j]).
// Used for mutated sign tables, where the bracket is deliberately not
// antisymmetric and a stored upper-triangle table cannot represent it.
using BracketFn =
    std::function<void(DenseAccum&, const Rational&, int, int)>;
CheckReport jacobi_scan(int dim, const std::vector<std::string>& labels,
                        const BracketFn& bracket, int threads = 0,
                        bool stop_at_first = false);

// Recomputes both bracket orders from the model and checks
// [x,y] = -[y,x] on every basis pair.
CheckReport model_antisymmetry_check(const TensorModel& m);

// Every stored bracket lands in the xor of its arguments' degrees.
CheckReport degree_check(const StructureConstants& sc);

// Killing form as a dense symmetric matrix. Pairs in different degree
// blocks are skipped: ad(x) ad(y) then shifts every block by a nonzero
// group element, so its trace vanishes.
Mat killing_form(const StructureConstants& sc, int threads = 0);
int matrix_rank(const Mat& k);

// Basis of the center {x : [x, e_j] = 0 for all j}.
std::vector<SparseVec> center_basis(const StructureConstants& sc);
// Rank of the span of all brackets; equals dim exactly when the algebra
// is perfect.
int derived_rank(const StructureConstants& sc);

}  // namespace msq
