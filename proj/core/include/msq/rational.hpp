#pragma once
#include <gmpxx.h>
#include <string>
#include <cstdint>

namespace msq {

// Exact rational scalar. GMP's canonical form keeps fractions reduced with a
// positive denominator, which is exactly the invariant the rest of the code
// relies on. All arithmetic in the library goes through this type.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// Canonical decimal string "num/den" with the denominator always explicit,
// e.g. "3/1", "-1/2". Used by the JSON export, which must be byte-stable.
std::string rat_str(const Rational& r);

// Parses "num/den" or a bare integer. Throws std::invalid_argument on junk.
Rational rat_parse(const std::string& s);

} // namespace msq
