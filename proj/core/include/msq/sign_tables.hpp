#pragma once

#include <msq/rational.hpp>
#include <msq/report.hpp>

#include <array>
#include <string>
#include <vector>

namespace msq {

// A subset of {1,...,8} packed as a bit mask: bit k-1 holds element k.
using Subset = unsigned;

int subset_card(Subset s);
std::vector<int> subset_elements(Subset s);  // ascending
std::string subset_str(Subset s);            // "{1,2,5,6}"; "{}" when empty

// The eight graded models, each with a frozen list of grading subsets.
enum class Family { d4, c3, f4, d6, e7, e8, a5, e6 };

Family family_from_name(const std::string& name);
const std::string& family_name(Family fam);
const std::vector<Subset>& family_subsets(Family fam);
// Slots whose sl2 copy is present in the model, ascending (e.g. the d6
// family lives on slots {1,2,3,5,6,7}).
const std::vector<int>& family_slots(Family fam);
bool family_contains(Family fam, Subset s);
int family_index(Family fam, Subset s);  // position in family_subsets; -1 if absent

// Bracket scaling constant for a pair of grading subsets.
Rational eps(Family fam, Subset sigma, Subset tau);

// Case-by-case form of the f4 constants; agrees with eps(Family::f4, ...)
// on all 64 pairs.  The two cases pairing a 2-subset with the full set
// return +1 exactly when the constants table does (the catch-all
// "contains 4" rule applies only when neither argument is the full set).
Rational eps_f4_cases(Subset sigma, Subset tau);

// Sign cocycles on Z2^k, arguments bit-packed (bit i-1 holds coordinate i).
int cocycle_f(unsigned x, unsigned y);    // k = 3
int cocycle_fp(unsigned x, unsigned y);   // k = 2
int cocycle_g(unsigned x, unsigned y);    // k = 4

// Linear parametrizations of the grading subsets.
Subset chi2(unsigned x);  // Z2^2 -> the d6 subsets
Subset chi3(unsigned x);  // Z2^3 -> the e7 subsets
Subset chi4(unsigned x);  // Z2^4 -> e8 subsets; x = 8 alone gives the full set
unsigned chi4_inverse(Subset s);  // defined on the e8 family

// Confirms the sign tables against their closed forms: e7 against
// (-1)^f, d6 against (-1)^f', e8 against (-1)^g (all printed cells),
// f4 against eps_f4_cases.  Other families are rejected.
CheckReport closed_formula_check(Family fam);

// For every pair of distinct nonempty subsets whose symmetric difference
// stays in the family, checks eps(tau,sigma) = (-1)^(|sigma&tau|+1)
// eps(sigma,tau), the compatibility law that makes the graded bracket
// anticommutative (pairs with the empty set flip with a bare minus instead,
// which is consistent exactly when both constants are 1, checked directly);
// also checks eps(empty,sigma) = eps(sigma,empty) = 1.
CheckReport antisymmetry_check(Family fam);

// Octonions as the sign-twisted group algebra of Z2^3: e^x e^y equals
// (-1)^f(x,y) e^(x+y).  Unit order 0..7 = 1, i, j, k, l, il, jl, kl with
// i = (1,0,0), j = (0,1,0), l = (0,0,1), so k = ij sits at (1,1,0).
struct SignedUnit {
  int sign;       // +1 or -1
  unsigned code;  // element of Z2^3, doubling as the unit index
};
SignedUnit octonion_product(unsigned x, unsigned y);
const std::array<std::string, 8>& octonion_unit_names();
// Frozen reference multiplication table (row times column) for the
// product check.
const std::array<std::array<SignedUnit, 8>, 8>& octonion_reference_table();

// Printed cell of the 15x15 e8 constants table; false at the cells that
// carry no value (the complement pairs, whose brackets vanish).
bool e8_printed_value(int row, int col, Rational& out);

// Fano-plane combinatorics: under the fixed numbering of {1,...,7} by the
// nonzero points of Z2^3 (and 8 by the origin), the nonempty e7 subsets
// are the quadrilaterals (complements of lines), the nonempty e8 subsets
// are the 14 affine planes, and chi4(a) solves a1 x + a2 y + a3 z + a4 = 1.
CheckReport fano_check();

}  // namespace msq
