#pragma once

#include <msq/lie.hpp>

#include <string>
#include <vector>

namespace msq {

// Cartan basis element: sign * (model basis vector at index). The slot
// elements are gamma of the symplectic pair, stored as minus the sp h
// generator; the torus elements (weighted models) enter with sign +1.
struct CartanElement {
  int index = 0;
  int sign = 1;
  std::string label;
};

struct WeightSpace {
  std::vector<Rational> weight;  // eigenvalue per Cartan element
  std::vector<int> members;      // basis indices, ascending
  bool zero() const;
};

// Joint eigenvalue decomposition of the adjoint action of the canonical
// Cartan basis. All eight models act diagonally on their frozen bases.
struct RootDatum {
  std::vector<CartanElement> cartan;
  std::vector<WeightSpace> spaces;  // deterministic order

  int rank() const { return (int)cartan.size(); }
  const WeightSpace* zero_space() const;  // nullptr when absent
  long root_count() const;                // members of nonzero spaces
  // One coordinate vector per root, multiplicities expanded, sorted
  // lexicographically.
  std::vector<std::vector<Rational>> root_vectors() const;
};

RootDatum root_datum(const TensorModel& m, const StructureConstants& sc);

// Positive roots under the frozen order (positive = highest-index nonzero
// coordinate is positive); simple roots are the positives that are not the
// sum of two positives. Sorted lexicographically.
std::vector<std::vector<Rational>> simple_roots(const RootDatum& rd);

// Cartan integers 2 (a_i, a_j) / (a_j, a_j) for the given root list, under
// the inner product induced on weights by the Killing form restricted to
// the Cartan basis (killing is the full form of the same table the datum
// was computed from).
std::vector<std::vector<Rational>> cartan_matrix(
    const RootDatum& rd, const Mat& killing,
    const std::vector<std::vector<Rational>>& roots);

// Shape census: single coordinate +-2 (sl2 pairs) versus all nonzero
// coordinates +-1 (pattern blocks) versus anything else.
struct RootCensus {
  long sp_like = 0;
  long pattern_like = 0;
  long other = 0;
};
RootCensus classify_roots(const RootDatum& rd);

}  // namespace msq
