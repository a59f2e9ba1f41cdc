#pragma once
#include "msq/rational.hpp"
#include <vector>
#include <utility>
#include <optional>
#include <stdexcept>
#include <cstdint>

namespace msq {

// Sparse vector over Rational: strictly increasing indices, no explicit zeros.
struct SparseVec {
    std::vector<std::pair<int, Rational>> terms;

    SparseVec() = default;
    static SparseVec unit(int i, const Rational& c = Rational(1));

    bool empty() const { return terms.empty(); }
    int nnz() const { return (int)terms.size(); }
    Rational get(int i) const;
    void set(int i, const Rational& c);   // insert/overwrite/remove-if-zero
    void add(int i, const Rational& c);   // merge one term

    SparseVec& operator+=(const SparseVec& o);
    SparseVec& axpy(const Rational& c, const SparseVec& o); // *this += c*o
    SparseVec& operator*=(const Rational& c);
    SparseVec operator-() const;
    bool operator==(const SparseVec& o) const { return terms == o.terms; }

    // Fails loudly if the invariants are broken (used by tests).
    void check_invariants() const;
};

SparseVec operator+(SparseVec a, const SparseVec& b);
SparseVec operator-(SparseVec a, const SparseVec& b);
SparseVec operator*(const Rational& c, SparseVec v);
Rational dot(const SparseVec& a, const SparseVec& b);

// Dense accumulator with version stamps: constant-time reset, used in the hot
// bracket/axiom loops to avoid allocation churn.
class DenseAccum {
public:
    explicit DenseAccum(int n) : val_(n), stamp_(n, 0), cur_(1) {}
    void reset() { ++cur_; touched_.clear(); }
    void add(int i, const Rational& c);
    void axpy(const Rational& c, const SparseVec& v);
    bool is_zero() const;
    SparseVec to_sparse() const; // sorted, zero-free
    int size() const { return (int)val_.size(); }

private:
    std::vector<Rational> val_;
    std::vector<uint32_t> stamp_;
    std::vector<int> touched_;
    uint32_t cur_;
};

// Row-sparse rational matrix.
struct RatMatrix {
    int rows = 0, cols = 0;
    std::vector<SparseVec> row;

    RatMatrix() = default;
    RatMatrix(int r, int c) : rows(r), cols(c), row(r) {}
    void set(int r, int c, const Rational& v) { row[r].set(c, v); }
    Rational get(int r, int c) const { return row[r].get(c); }
    void add_row(SparseVec v) { row.push_back(std::move(v)); rows = (int)row.size(); }
};

// Incremental echelon reducer over the integers (fraction-free
// cross-multiplication, rows kept primitive by content division). Supports
// rank, span membership and canonical RREF extraction.
class RowReducer {
public:
    explicit RowReducer(int cols) : cols_(cols) {}

    // Reduces v against the current rows; if a nonzero remainder survives it
    // becomes a new pivot row and true is returned.
    bool insert(const SparseVec& v);

    // True if v lies in the current row span.
    bool contains(const SparseVec& v) const;

    int rank() const { return (int)rows_.size(); }
    int cols() const { return cols_; }
    const std::vector<int>& pivots() const { return pivot_cols_; }

    // Canonical reduced rows (unique RREF of the inserted span), pivot columns
    // strictly increasing top to bottom, leading coefficient 1.
    std::vector<SparseVec> rref() const;

private:
    struct IntRow { std::vector<std::pair<int, mpz_class>> terms; };
    int cols_;
    std::vector<IntRow> rows_;        // echelon order by pivot column
    std::vector<int> pivot_cols_;     // parallel to rows_
    std::optional<IntRow> reduce(const SparseVec& v) const;
    friend std::vector<SparseVec> kernel_basis(const RatMatrix&);
};

// Canonical RREF of m (unique). Rows with all zeros are dropped.
std::vector<SparseVec> rref(const RatMatrix& m);

int rank(const RatMatrix& m);

// Basis of the right null space {x : m x = 0}, itself in reduced echelon form
// (pivot columns ascending, leading coefficient 1). Deterministic: RREF is a
// canonical form, so the output depends only on the matrix.
std::vector<SparseVec> kernel_basis(const RatMatrix& m);

struct NonDiagonalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Groups basis indices 0..n-1 by their joint eigenvalue tuple under maps that
// each act diagonally on the standard basis (map given as columns: image of
// basis j). Throws NonDiagonalError if some image is not a multiple of its own
// basis vector. Group order: by first basis index touched (deterministic).
struct EigenGroup {
    std::vector<Rational> value; // one eigenvalue per supplied map
    std::vector<int> members;
};
std::vector<EigenGroup> simultaneous_eigensplit(
    const std::vector<std::vector<SparseVec>>& map_columns, int n);

} // namespace msq
