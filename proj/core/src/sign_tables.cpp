#include <msq/sign_tables.hpp>

#include <map>
#include <set>
#include <stdexcept>

namespace msq {

namespace {

constexpr Subset kOmega4 = 0xF;  // {1,2,3,4}

const std::vector<Subset> kD4Subsets = {0x0, 0xF};
const std::vector<Subset> kC3Subsets = {0x0, 0x3, 0x6, 0x5};
const std::vector<Subset> kF4Subsets = {0x0, 0x3, 0x6, 0x5,
                                        0xF, 0xC, 0x9, 0xA};
// {1,2,5,6}, {2,3,6,7}, {1,3,5,7}
const std::vector<Subset> kD6Subsets = {0, 51, 102, 85};
// + {1,2,3,4}, {3,4,5,6}, {1,4,6,7}, {2,4,5,7}
const std::vector<Subset> kE7Subsets = {0, 51, 102, 85, 15, 60, 105, 90};
// + {3,4,7,8}, {1,4,5,8}, {2,4,6,8}, {5,6,7,8}, {1,2,7,8}, {2,3,5,8},
//   {1,3,6,8}
const std::vector<Subset> kE8Subsets = {0,   51,  102, 85,  15,
                                        60,  105, 90,  204, 153,
                                        170, 240, 195, 150, 165};

const std::vector<int> kSlots123 = {1, 2, 3};
const std::vector<int> kSlots1234 = {1, 2, 3, 4};
const std::vector<int> kSlotsD6 = {1, 2, 3, 5, 6, 7};
const std::vector<int> kSlots17 = {1, 2, 3, 4, 5, 6, 7};
const std::vector<int> kSlots18 = {1, 2, 3, 4, 5, 6, 7, 8};

const int kF4Table[8][8] = {
    {1, 1, 1, 1, 1, 1, 1, 1},      //
    {1, -2, 1, 1, 1, -2, -1, -1},  //
    {1, 1, -2, 1, 1, -1, -2, -1},  //
    {1, 1, 1, -2, 1, -1, -1, -2},  //
    {1, -1, -1, -1, -1, 1, 1, 1},  //
    {1, 2, -1, -1, -1, -2, -1, -1},
    {1, -1, 2, -1, -1, -1, -2, -1},
    {1, -1, -1, 2, -1, -1, -1, -2},
};

const int kE7Table[8][8] = {
    {1, 1, 1, 1, 1, 1, 1, 1},        //
    {1, -1, 1, -1, 1, -1, -1, 1},    //
    {1, -1, -1, 1, 1, 1, -1, -1},    //
    {1, 1, -1, -1, 1, -1, 1, -1},    //
    {1, -1, -1, -1, -1, 1, 1, 1},    //
    {1, 1, -1, 1, -1, -1, -1, 1},    //
    {1, 1, 1, -1, -1, 1, -1, -1},    //
    {1, -1, 1, 1, -1, -1, 1, -1},
};

// 0 marks the cells that carry no printed value (the complement pairs).
const int kE8PrintedTable[15][15] = {
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {1, -1, 1, -1, 1, -1, -1, 1, 0, 1, -1, 1, -1, -1, 1},
    {1, -1, -1, 1, 1, 1, -1, -1, -1, 0, 1, 1, 1, -1, -1},
    {1, 1, -1, -1, 1, -1, 1, -1, 1, -1, 0, 1, -1, 1, -1},
    {1, -1, -1, -1, -1, 1, 1, 1, 1, 1, 1, 0, -1, -1, -1},
    {1, 1, -1, 1, -1, -1, -1, 1, -1, 1, -1, 1, 0, 1, -1},
    {1, 1, 1, -1, -1, 1, -1, -1, -1, -1, 1, 1, -1, 0, 1},
    {1, -1, 1, 1, -1, -1, 1, -1, 1, -1, -1, 1, 1, -1, 0},
    {1, 0, 1, -1, -1, 1, 1, -1, -1, 1, -1, -1, 1, 1, -1},
    {1, -1, 0, 1, -1, -1, 1, 1, -1, -1, 1, -1, -1, 1, 1},
    {1, 1, -1, 0, -1, 1, -1, 1, 1, -1, -1, -1, 1, -1, 1},
    {1, -1, -1, -1, 0, -1, -1, -1, 1, 1, 1, -1, 1, 1, 1},
    {1, 1, -1, 1, 1, 0, 1, -1, -1, 1, -1, -1, -1, -1, 1},
    {1, 1, 1, -1, 1, -1, 0, 1, -1, -1, 1, -1, 1, -1, -1},
    {1, -1, 1, 1, 1, 1, -1, 0, 1, -1, -1, -1, -1, 1, -1},
};

const std::array<std::string, 8> kOctonionNames = {"1",  "i",  "j",  "k",
                                                   "l",  "il", "jl", "kl"};

// Reference products, row unit times column unit, frozen from the
// classical table (the il row's kl column is +j: the product of the
// codes (1,0,1) and (1,1,1) lands on (0,1,0) with cocycle value 0).
const int kOctonionRefSign[8][8] = {
    {1, 1, 1, 1, 1, 1, 1, 1},        //
    {1, -1, 1, -1, 1, -1, -1, 1},    // i
    {1, -1, -1, 1, 1, 1, -1, -1},    // j
    {1, 1, -1, -1, 1, -1, 1, -1},    // k
    {1, -1, -1, -1, -1, 1, 1, 1},    // l
    {1, 1, -1, 1, -1, -1, -1, 1},    // il
    {1, 1, 1, -1, -1, 1, -1, -1},    // jl
    {1, -1, 1, 1, -1, -1, 1, -1},    // kl
};
const unsigned kOctonionRefUnit[8][8] = {
    {0, 1, 2, 3, 4, 5, 6, 7}, {1, 0, 3, 2, 5, 4, 7, 6},
    {2, 3, 0, 1, 6, 7, 4, 5}, {3, 2, 1, 0, 7, 6, 5, 4},
    {4, 5, 6, 7, 0, 1, 2, 3}, {5, 4, 7, 6, 1, 0, 3, 2},
    {6, 7, 4, 5, 2, 3, 0, 1}, {7, 6, 5, 4, 3, 2, 1, 0},
};

// Numbering of {1,...,8} by the points of Z2^3 (bit 0 holds the first
// coordinate); 8 sits at the origin.
const unsigned kPointCode[9] = {0u, 5u, 7u, 6u, 4u, 1u, 3u, 2u, 0u};

int bit(unsigned x, int i) { return (x >> (i - 1)) & 1u; }

int table_index(const std::vector<Subset>& subsets, Subset s) {
  for (size_t i = 0; i < subsets.size(); ++i)
    if (subsets[i] == s) return static_cast<int>(i);
  return -1;
}

int require_index(Family fam, Subset s) {
  int i = table_index(family_subsets(fam), s);
  if (i < 0)
    throw std::invalid_argument("subset " + subset_str(s) +
                                " not in family " + family_name(fam));
  return i;
}

}  // namespace

int subset_card(Subset s) { return __builtin_popcount(s); }

std::vector<int> subset_elements(Subset s) {
  std::vector<int> out;
  for (int k = 1; k <= 8; ++k)
    if (bit(s, k)) out.push_back(k);
  return out;
}

std::string subset_str(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int k : subset_elements(s)) {
    if (!first) out += ",";
    out += std::to_string(k);
    first = false;
  }
  return out + "}";
}

Family family_from_name(const std::string& name) {
  static const std::map<std::string, Family> kNames = {
      {"d4", Family::d4}, {"c3", Family::c3}, {"f4", Family::f4},
      {"d6", Family::d6}, {"e7", Family::e7}, {"e8", Family::e8},
      {"a5", Family::a5}, {"e6", Family::e6}};
  auto it = kNames.find(name);
  if (it == kNames.end())
    throw std::invalid_argument("unknown family: " + name);
  return it->second;
}

const std::string& family_name(Family fam) {
  static const std::array<std::string, 8> kNames = {"d4", "c3", "f4", "d6",
                                                    "e7", "e8", "a5", "e6"};
  return kNames[static_cast<int>(fam)];
}

const std::vector<Subset>& family_subsets(Family fam) {
  switch (fam) {
    case Family::d4: return kD4Subsets;
    case Family::c3: return kC3Subsets;
    case Family::f4: return kF4Subsets;
    case Family::d6: return kD6Subsets;
    case Family::e7: return kE7Subsets;
    case Family::e8: return kE8Subsets;
    case Family::a5: return kC3Subsets;
    case Family::e6: return kF4Subsets;
  }
  throw std::invalid_argument("unknown family");
}

const std::vector<int>& family_slots(Family fam) {
  switch (fam) {
    case Family::d4: return kSlots1234;
    case Family::c3: return kSlots123;
    case Family::f4: return kSlots1234;
    case Family::d6: return kSlotsD6;
    case Family::e7: return kSlots17;
    case Family::e8: return kSlots18;
    case Family::a5: return kSlots123;
    case Family::e6: return kSlots1234;
  }
  throw std::invalid_argument("unknown family");
}

bool family_contains(Family fam, Subset s) {
  return table_index(family_subsets(fam), s) >= 0;
}

int family_index(Family fam, Subset s) {
  return table_index(family_subsets(fam), s);
}

Rational eps(Family fam, Subset sigma, Subset tau) {
  int i = require_index(fam, sigma);
  int j = require_index(fam, tau);
  switch (fam) {
    case Family::d4:
      return (sigma == kOmega4 && tau == kOmega4) ? -1 : 1;
    case Family::c3:
      return (sigma == tau && sigma != 0) ? -2 : 1;
    case Family::f4:
      return kF4Table[i][j];
    case Family::d6:
    case Family::e7:
      return kE7Table[i][j];
    case Family::e8: {
      int printed = kE8PrintedTable[i][j];
      if (printed != 0) return printed;
      return cocycle_g(chi4_inverse(sigma), chi4_inverse(tau)) ? -1 : 1;
    }
    case Family::a5: {
      Rational base = eps(Family::c3, sigma, tau);
      if (sigma == tau && sigma != 0) return base / 2;
      return base;
    }
    case Family::e6: {
      Rational base = eps(Family::f4, sigma, tau);
      bool two_subsets = sigma != 0 && sigma != kOmega4 && tau != 0 &&
                         tau != kOmega4;
      if (two_subsets && (tau == sigma || tau == (kOmega4 ^ sigma)))
        return base / 2;
      return base;
    }
  }
  throw std::invalid_argument("unknown family");
}

Rational eps_f4_cases(Subset sigma, Subset tau) {
  if (!family_contains(Family::f4, sigma) ||
      !family_contains(Family::f4, tau))
    throw std::invalid_argument("arguments outside the f4 family");
  if (sigma == 0 || tau == 0) return 1;
  if (sigma == kOmega4 && tau == kOmega4) return -1;
  if (sigma == tau) return -2;
  bool s4 = bit(sigma, 4), t4 = bit(tau, 4);
  if (s4 && sigma == (kOmega4 ^ tau)) return 2;
  if (t4 && tau == (kOmega4 ^ sigma)) return -2;
  if (tau == kOmega4) return s4 ? -1 : 1;
  if (sigma == kOmega4) return t4 ? 1 : -1;
  return (s4 || t4) ? -1 : 1;
}

int cocycle_f(unsigned x, unsigned y) {
  int x1 = x & 1, x2 = (x >> 1) & 1, x3 = (x >> 2) & 1;
  int y1 = y & 1, y2 = (y >> 1) & 1, y3 = (y >> 2) & 1;
  int s = x1 * y1 + x2 * y1 + x2 * y2 + x3 * y1 + x3 * y2 + x3 * y3;
  s += x1 * y2 * y3 + x2 * y1 * y3 + x3 * y1 * y2;
  return s & 1;
}

int cocycle_fp(unsigned x, unsigned y) {
  int x1 = x & 1, x2 = (x >> 1) & 1;
  int y1 = y & 1, y2 = (y >> 1) & 1;
  return (x1 * y1 + x2 * (y1 + y2)) & 1;
}

int cocycle_g(unsigned x, unsigned y) {
  int x3 = (x >> 2) & 1, x4 = (x >> 3) & 1;
  int y3 = (y >> 2) & 1, y4 = (y >> 3) & 1;
  return (cocycle_f(x & 7u, y & 7u) + x3 * y4 + x4 * y3) & 1;
}

Subset chi2(unsigned x) {
  int x1 = x & 1, x2 = (x >> 1) & 1;
  int c[7] = {x1, x1 ^ x2, x2, 0, x1, x1 ^ x2, x2};
  Subset s = 0;
  for (int k = 0; k < 7; ++k) s |= static_cast<unsigned>(c[k]) << k;
  return s;
}

Subset chi3(unsigned x) {
  int x1 = x & 1, x2 = (x >> 1) & 1, x3 = (x >> 2) & 1;
  int c[7] = {x1 ^ x3, x1 ^ x2 ^ x3, x2 ^ x3, x3, x1, x1 ^ x2, x2};
  Subset s = 0;
  for (int k = 0; k < 7; ++k) s |= static_cast<unsigned>(c[k]) << k;
  return s;
}

Subset chi4(unsigned x) {
  int x1 = x & 1, x2 = (x >> 1) & 1, x3 = (x >> 2) & 1, x4 = (x >> 3) & 1;
  int c[8] = {x1 ^ x3 ^ x4, x1 ^ x2 ^ x3 ^ x4, x2 ^ x3 ^ x4, x3 ^ x4,
              x1 ^ x4,      x1 ^ x2 ^ x4,      x2 ^ x4,      x4};
  Subset s = 0;
  for (int k = 0; k < 8; ++k) s |= static_cast<unsigned>(c[k]) << k;
  return s;
}

unsigned chi4_inverse(Subset s) {
  for (unsigned x = 0; x < 16; ++x)
    if (x != 8 && chi4(x) == s) return x;
  throw std::invalid_argument("subset " + subset_str(s) +
                              " not in the e8 family");
}

CheckReport closed_formula_check(Family fam) {
  CheckReport report;
  const auto& subsets = family_subsets(fam);
  auto compare = [&](Subset s, Subset t, const Rational& expected) {
    ++report.checked;
    Rational got = eps(fam, s, t);
    if (got != expected)
      report.fail(family_name(fam) + " eps(" + subset_str(s) + "," +
                  subset_str(t) + ") = " + rat_str(got) + ", formula gives " +
                  rat_str(expected));
  };
  switch (fam) {
    case Family::e7:
      for (unsigned x = 0; x < 8; ++x)
        for (unsigned y = 0; y < 8; ++y)
          compare(chi3(x), chi3(y), cocycle_f(x, y) ? -1 : 1);
      break;
    case Family::d6:
      for (unsigned x = 0; x < 4; ++x)
        for (unsigned y = 0; y < 4; ++y)
          compare(chi2(x), chi2(y), cocycle_fp(x, y) ? -1 : 1);
      break;
    case Family::e8:
      for (Subset s : subsets)
        for (Subset t : subsets)
          compare(s, t,
                  cocycle_g(chi4_inverse(s), chi4_inverse(t)) ? -1 : 1);
      break;
    case Family::f4:
      for (Subset s : subsets)
        for (Subset t : subsets) compare(s, t, eps_f4_cases(s, t));
      break;
    default:
      throw std::invalid_argument("no closed formula for family " +
                                  family_name(fam));
  }
  return report;
}

CheckReport antisymmetry_check(Family fam) {
  CheckReport report;
  const auto& subsets = family_subsets(fam);
  for (Subset s : subsets) {
    ++report.checked;
    if (eps(fam, 0, s) != 1 || eps(fam, s, 0) != 1)
      report.fail(family_name(fam) + ": eps with the empty set must be 1 at " +
                  subset_str(s));
  }
  for (Subset s : subsets)
    for (Subset t : subsets) {
      if (s == t || s == 0 || t == 0) continue;
      if (!family_contains(fam, s ^ t)) continue;  // bracket vanishes
      ++report.checked;
      int parity = subset_card(s & t) & 1;
      Rational lhs = eps(fam, t, s);
      Rational rhs = (parity ? 1 : -1) * eps(fam, s, t);
      if (lhs != rhs)
        report.fail(family_name(fam) + ": eps(" + subset_str(t) + "," +
                    subset_str(s) + ") incompatible with eps(" +
                    subset_str(s) + "," + subset_str(t) + ")");
    }
  return report;
}

SignedUnit octonion_product(unsigned x, unsigned y) {
  return {cocycle_f(x, y) ? -1 : 1, (x ^ y) & 7u};
}

const std::array<std::string, 8>& octonion_unit_names() {
  return kOctonionNames;
}

const std::array<std::array<SignedUnit, 8>, 8>& octonion_reference_table() {
  static const auto table = [] {
    std::array<std::array<SignedUnit, 8>, 8> t{};
    for (int x = 0; x < 8; ++x)
      for (int y = 0; y < 8; ++y)
        t[x][y] = {kOctonionRefSign[x][y], kOctonionRefUnit[x][y]};
    return t;
  }();
  return table;
}

bool e8_printed_value(int row, int col, Rational& out) {
  if (row < 0 || row >= 15 || col < 0 || col >= 15)
    throw std::invalid_argument("e8 table index out of range");
  int v = kE8PrintedTable[row][col];
  if (v == 0) return false;
  out = v;
  return true;
}

CheckReport fano_check() {
  CheckReport report;

  // chi4(a) solves a1 x + a2 y + a3 z + a4 = 1 over the numbered points.
  for (unsigned a = 0; a < 16; ++a) {
    if (a == 8) continue;  // the full set; excluded from the family
    Subset plane = 0;
    for (int k = 1; k <= 8; ++k) {
      unsigned p = kPointCode[k];
      int val = ((a & 1) * (p & 1)) ^ (((a >> 1) & 1) * ((p >> 1) & 1)) ^
                (((a >> 2) & 1) * ((p >> 2) & 1)) ^ ((a >> 3) & 1);
      if (val == 1) plane |= 1u << (k - 1);
    }
    ++report.checked;
    if (plane != chi4(a))
      report.fail("chi4(" + std::to_string(a) + ") = " +
                  subset_str(chi4(a)) + " but the plane is " +
                  subset_str(plane));
  }

  // Nonempty e7 subsets = quadrilaterals (complements of the Fano lines).
  std::set<Subset> quadrilaterals;
  for (unsigned n = 1; n < 8; ++n) {
    Subset q = 0;
    for (int k = 1; k <= 7; ++k) {
      unsigned p = kPointCode[k];
      int dot = ((n & 1) & (p & 1)) ^ (((n >> 1) & 1) & ((p >> 1) & 1)) ^
                (((n >> 2) & 1) & ((p >> 2) & 1));
      if (dot != 0) q |= 1u << (k - 1);  // off the line with normal n
    }
    quadrilaterals.insert(q);
  }
  std::set<Subset> e7_nonempty(kE7Subsets.begin() + 1, kE7Subsets.end());
  ++report.checked;
  if (quadrilaterals != e7_nonempty)
    report.fail("quadrilateral set differs from the nonempty e7 subsets");

  // Nonempty e8 subsets = the 14 affine planes of Z2^3.
  std::set<Subset> planes;
  for (unsigned n = 1; n < 8; ++n)
    for (unsigned c = 0; c < 2; ++c) {
      Subset plane = 0;
      for (int k = 1; k <= 8; ++k) {
        unsigned p = kPointCode[k];
        unsigned dot = ((n & 1) & (p & 1)) ^
                       (((n >> 1) & 1) & ((p >> 1) & 1)) ^
                       (((n >> 2) & 1) & ((p >> 2) & 1));
        if (dot == c) plane |= 1u << (k - 1);
      }
      planes.insert(plane);
    }
  std::set<Subset> e8_nonempty(kE8Subsets.begin() + 1, kE8Subsets.end());
  ++report.checked;
  if (planes.size() != 14)
    report.fail("expected 14 affine planes, found " +
                std::to_string(planes.size()));
  if (planes != e8_nonempty)
    report.fail("affine plane set differs from the nonempty e8 subsets");

  return report;
}

}  // namespace msq
