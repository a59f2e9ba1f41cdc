#include <msq/tensor_model.hpp>

#include <stdexcept>

namespace msq {

namespace {

constexpr Subset kOmega4 = 0xF;

// Symplectic pairing of basis letters: <v|w> = 1, <w|v> = -1, <x|x> = 0.
int sympl(int b, int c) {
  if (b == c) return 0;
  return b == 0 ? 1 : -1;
}

const char* const kGenName[3] = {"e", "h", "f"};

// Commutator table for the (e, h, f) basis: [e,f] = h, [h,e] = 2e,
// [h,f] = -2f. Every product is a single basis multiple.
bool sp_commutator_table(int g1, int g2, int& gen, int& coeff) {
  if (g1 == g2) return false;
  if (g1 == 0 && g2 == 1) { gen = 0; coeff = -2; return true; }
  if (g1 == 1 && g2 == 0) { gen = 0; coeff = 2; return true; }
  if (g1 == 0 && g2 == 2) { gen = 1; coeff = 1; return true; }
  if (g1 == 2 && g2 == 0) { gen = 1; coeff = -1; return true; }
  if (g1 == 1 && g2 == 2) { gen = 2; coeff = -2; return true; }
  // g1 == 2 && g2 == 1
  gen = 2;
  coeff = 2;
  return true;
}

// Action of a generator on one letter: list of (new letter, coeff), at most
// one term. e sends w to v, f sends v to w, h scales v by +1 and w by -1.
bool sp_letter_action(int gen, int letter, int& out_letter, int& coeff) {
  switch (gen) {
    case 0:  // e
      if (letter == 1) { out_letter = 0; coeff = 1; return true; }
      return false;
    case 1:  // h
      out_letter = letter;
      coeff = letter == 0 ? 1 : -1;
      return true;
    default:  // f
      if (letter == 0) { out_letter = 1; coeff = 1; return true; }
      return false;
  }
}

// gamma_{x,y} for a pair of letters, in the (e, h, f) basis:
// gamma_{v,v} = 2e, gamma_{v,w} = gamma_{w,v} = -h, gamma_{w,w} = -2f.
void gamma_coords(int b, int c, int& gen, int& coeff) {
  if (b == 0 && c == 0) { gen = 0; coeff = 2; return; }
  if (b == 1 && c == 1) { gen = 2; coeff = -2; return; }
  gen = 1;
  coeff = -1;
}

std::string pattern_label(Subset sigma, unsigned pattern) {
  std::string out;
  int r = 0;
  for (int slot : subset_elements(sigma)) {
    out += ((pattern >> r) & 1u) ? 'w' : 'v';
    out += std::to_string(slot);
    ++r;
  }
  return out;
}

}  // namespace

int iota_class(Subset sigma) {
  switch (sigma) {
    case 0x3: case 0xC: return 0;  // {1,2}, {3,4}
    case 0x6: case 0x9: return 1;  // {2,3}, {1,4}
    case 0x5: case 0xA: return 2;  // {1,3}, {2,4}
    default:
      throw std::invalid_argument("iota_class: not a 2-subset of {1..4}: " +
                                  subset_str(sigma));
  }
}

int TensorModel::slot_pos(int slot) const {
  for (int i = 0; i < (int)slots.size(); ++i)
    if (slots[i] == slot) return i;
  return -1;
}

int TensorModel::sp_index(int slot, int gen) const {
  int p = slot_pos(slot);
  if (p < 0) throw std::invalid_argument("sp_index: slot not in model");
  return 3 * p + gen;
}

int TensorModel::torus_index(int t) const {
  return 3 * n_slots() + t;
}

int TensorModel::tensor_index(int subset_pos, unsigned pattern,
                              int esign) const {
  int base = offset[subset_pos];
  if (weighted_block(subset_pos)) return base + 2 * (int)pattern + esign;
  return base + (int)pattern;
}

bool TensorModel::weighted_block(int subset_pos) const {
  if (!extended || subset_pos == 0) return false;
  return subsets[subset_pos] != kOmega4;
}

TensorModel::BasisRef TensorModel::decode(int index) const {
  if (index < 0 || index >= dim)
    throw std::out_of_range("TensorModel::decode: index out of range");
  int pos = (int)subsets.size() - 1;
  while (offset[pos] > index) --pos;
  BasisRef ref;
  ref.subset_pos = pos;
  int rel = index - offset[pos];
  if (pos == 0) {
    if (rel < 3 * n_slots()) {
      ref.slot = slots[rel / 3];
      ref.gen = rel % 3;
    } else {
      ref.torus = rel - 3 * n_slots();
    }
    return ref;
  }
  if (weighted_block(pos)) {
    ref.pattern = (unsigned)(rel / 2);
    ref.esign = rel % 2;
  } else {
    ref.pattern = (unsigned)rel;
  }
  return ref;
}

PatternProduct phi_contract(Subset sigma, unsigned px, Subset tau,
                            unsigned py) {
  if (sigma == tau || sigma == 0 || tau == 0)
    throw std::invalid_argument("phi_contract: needs distinct nonempty subsets");
  PatternProduct out;
  out.coeff = rat(1);
  std::vector<int> selem = subset_elements(sigma);
  std::vector<int> telem = subset_elements(tau);
  auto letter_in = [](const std::vector<int>& elems, unsigned p, int slot) {
    for (int r = 0; r < (int)elems.size(); ++r)
      if (elems[r] == slot) return (int)((p >> r) & 1u);
    throw std::logic_error("phi_contract: slot not in subset");
  };
  // Shared slots contract with the first argument's letter on the left.
  for (int slot : selem) {
    if (!(tau & (1u << (slot - 1)))) continue;
    int s = sympl(letter_in(selem, px, slot), letter_in(telem, py, slot));
    if (s == 0) {
      out.coeff = rat(0);
      return out;
    }
    out.coeff *= s;
  }
  // Surviving factors keep their owner's letter, ascending slot order.
  Subset diff = sigma ^ tau;
  unsigned pattern = 0;
  int r = 0;
  for (int slot : subset_elements(diff)) {
    int letter = (sigma & (1u << (slot - 1)))
                     ? letter_in(selem, px, slot)
                     : letter_in(telem, py, slot);
    pattern |= (unsigned)letter << r;
    ++r;
  }
  out.pattern = pattern;
  return out;
}

std::vector<SpTerm> phi_same(Subset sigma, unsigned px, unsigned py) {
  std::vector<int> elems = subset_elements(sigma);
  int n = (int)elems.size();
  std::vector<SpTerm> out;
  for (int j = 0; j < n; ++j) {
    int prod = 1;
    for (int k = 0; k < n && prod != 0; ++k) {
      if (k == j) continue;
      prod *= sympl((int)((px >> k) & 1u), (int)((py >> k) & 1u));
    }
    if (prod == 0) continue;
    int gen, gc;
    gamma_coords((int)((px >> j) & 1u), (int)((py >> j) & 1u), gen, gc);
    out.push_back({elems[j], gen, rat(-prod * gc, 2)});
  }
  return out;
}

TensorModel build_extended_model(Family fam,
                                 const std::array<Rational, 3>& class2) {
  if (fam != Family::a5 && fam != Family::e6)
    throw std::invalid_argument("build_extended_model: family has no torus");
  TensorModel m;
  m.fam = fam;
  m.slots = family_slots(fam);
  m.subsets = family_subsets(fam);
  m.extended = true;
  m.profile[0] = {rat(1), rat(-1, 2), rat(-1, 2)};
  m.profile[1] = {rat(-1, 2), rat(1), rat(-1, 2)};
  m.profile[2] = class2;
  m.torus.push_back({rat(1), rat(0), rat(-1)});
  m.torus.push_back({rat(0), rat(1), rat(-1)});
  for (int c = 0; c < 3; ++c) {
    const auto& p = m.profile[c];
    SparseVec coords;
    if (is_zero(p[0] + p[1] + p[2])) {
      coords.set(0, p[0]);
      coords.set(1, p[1]);
    } else {
      // The profile escapes the sum-zero plane: it becomes a torus basis
      // vector of its own, carrying its action triple verbatim.
      coords.set((int)m.torus.size(), rat(1));
      m.torus.push_back(p);
    }
    m.profile_coords[c] = coords;
  }

  int n = m.n_slots();
  m.offset.assign(m.subsets.size(), 0);
  m.block.assign(m.subsets.size(), 0);
  m.block[0] = 3 * n + (int)m.torus.size();
  for (int pos = 1; pos < (int)m.subsets.size(); ++pos) {
    int patterns = 1 << subset_card(m.subsets[pos]);
    m.block[pos] = m.subsets[pos] == kOmega4 ? patterns : 2 * patterns;
  }
  for (int pos = 1; pos < (int)m.subsets.size(); ++pos)
    m.offset[pos] = m.offset[pos - 1] + m.block[pos - 1];
  m.dim = m.offset.back() + m.block.back();

  for (int s : m.slots)
    for (int g = 0; g < 3; ++g)
      m.labels.push_back(std::string(kGenName[g]) + std::to_string(s));
  for (int t = 0; t < (int)m.torus.size(); ++t)
    m.labels.push_back("t" + std::to_string(t));
  for (int pos = 1; pos < (int)m.subsets.size(); ++pos) {
    int patterns = 1 << subset_card(m.subsets[pos]);
    for (unsigned p = 0; p < (unsigned)patterns; ++p) {
      std::string base = pattern_label(m.subsets[pos], p);
      if (m.subsets[pos] == kOmega4) {
        m.labels.push_back(base);
      } else {
        m.labels.push_back(base + ":e+");
        m.labels.push_back(base + ":e-");
      }
    }
  }
  return m;
}

TensorModel build_model(Family fam) {
  if (fam == Family::a5 || fam == Family::e6)
    return build_extended_model(fam, {rat(-1, 2), rat(-1, 2), rat(1)});
  TensorModel m;
  m.fam = fam;
  m.slots = family_slots(fam);
  m.subsets = family_subsets(fam);

  int n = m.n_slots();
  m.offset.assign(m.subsets.size(), 0);
  m.block.assign(m.subsets.size(), 0);
  m.block[0] = 3 * n;
  for (int pos = 1; pos < (int)m.subsets.size(); ++pos)
    m.block[pos] = 1 << subset_card(m.subsets[pos]);
  for (int pos = 1; pos < (int)m.subsets.size(); ++pos)
    m.offset[pos] = m.offset[pos - 1] + m.block[pos - 1];
  m.dim = m.offset.back() + m.block.back();

  for (int s : m.slots)
    for (int g = 0; g < 3; ++g)
      m.labels.push_back(std::string(kGenName[g]) + std::to_string(s));
  for (int pos = 1; pos < (int)m.subsets.size(); ++pos)
    for (unsigned p = 0; p < (unsigned)m.block[pos]; ++p)
      m.labels.push_back(pattern_label(m.subsets[pos], p));
  return m;
}

namespace {

// Action of a degree-zero basis element on a tensor-block basis element.
SparseVec degree_zero_action(const TensorModel& m,
                             const TensorModel::BasisRef& f,
                             const TensorModel::BasisRef& x) {
  SparseVec out;
  Subset sigma = m.subsets[x.subset_pos];
  if (f.slot >= 0) {
    if (!(sigma & (1u << (f.slot - 1)))) return out;
    // Rank of the slot inside sigma.
    int r = 0;
    for (int slot : subset_elements(sigma)) {
      if (slot == f.slot) break;
      ++r;
    }
    int letter = (int)((x.pattern >> r) & 1u);
    int out_letter, coeff;
    if (!sp_letter_action(f.gen, letter, out_letter, coeff)) return out;
    unsigned np = (x.pattern & ~(1u << r)) | ((unsigned)out_letter << r);
    out.set(m.tensor_index(x.subset_pos, np, x.esign), rat(coeff));
    return out;
  }
  // Torus: acts through the weight line only.
  if (!m.weighted_block(x.subset_pos)) return out;
  int nu = x.esign == 0 ? 1 : -1;
  Rational c = rat(nu) * m.torus[f.torus][iota_class(sigma)];
  if (!is_zero(c)) out.set(m.tensor_index(x.subset_pos, x.pattern, x.esign), c);
  return out;
}

}  // namespace

SparseVec model_bracket(const TensorModel& m, int i, int j) {
  SparseVec out;
  if (i == j) return out;
  TensorModel::BasisRef a = m.decode(i);
  TensorModel::BasisRef b = m.decode(j);
  Subset sa = m.subsets[a.subset_pos];
  Subset sb = m.subsets[b.subset_pos];

  if (a.subset_pos == 0 && b.subset_pos == 0) {
    // sp copies bracket componentwise; the torus is central in degree zero.
    if (a.slot >= 0 && b.slot >= 0 && a.slot == b.slot) {
      int gen, coeff;
      if (sp_commutator_table(a.gen, b.gen, gen, coeff))
        out.set(m.sp_index(a.slot, gen), rat(coeff));
    }
    return out;
  }
  if (a.subset_pos == 0) return degree_zero_action(m, a, b);
  if (b.subset_pos == 0) return -degree_zero_action(m, b, a);

  Subset target = sa ^ sb;
  if (!family_contains(m.fam, target)) return out;
  Rational E = eps(m.fam, sa, sb);

  if (sa == sb) {
    int nu = a.esign == 0 ? 1 : -1;
    bool weighted = m.weighted_block(a.subset_pos);
    if (weighted && a.esign == b.esign) return out;  // weight signs must cancel
    for (const SpTerm& t : phi_same(sa, a.pattern, b.pattern))
      out.add(m.sp_index(t.slot, t.gen), E * t.coeff);
    if (weighted) {
      int prod = 1;
      int card = subset_card(sa);
      for (int k = 0; k < card && prod != 0; ++k)
        prod *= sympl((int)((a.pattern >> k) & 1u), (int)((b.pattern >> k) & 1u));
      if (prod != 0) {
        // Production sign is tied to the torus action sign (+nu alpha_i):
        // flipping both at once is the torus-negation isomorphism, and the
        // exhaustive Jacobi scan pins the relative sign.
        Rational c = E * rat(nu * prod);
        for (const auto& term : m.profile_coords[iota_class(sa)].terms)
          out.add(m.torus_index(term.first), c * term.second);
      }
    }
    return out;
  }

  int out_esign = 0;
  if (m.extended) {
    bool wa = m.weighted_block(a.subset_pos);
    bool wb = m.weighted_block(b.subset_pos);
    if (wa && wb) {
      if (target == kOmega4) {
        // Complementary pair: weight signs must cancel, output unweighted.
        if (a.esign == b.esign) return out;
      } else {
        // Generic pair: equal weight signs, output sign flipped.
        if (a.esign != b.esign) return out;
        out_esign = 1 - a.esign;
      }
    } else {
      // One argument in the unweighted full block: its partner's weight sign
      // is carried through unchanged.
      out_esign = wa ? a.esign : b.esign;
    }
  }
  PatternProduct pp = phi_contract(sa, a.pattern, sb, b.pattern);
  if (is_zero(pp.coeff)) return out;
  out.set(m.tensor_index(family_index(m.fam, target), pp.pattern, out_esign),
          E * pp.coeff);
  return out;
}

SparseVec model_bracket_vec(const TensorModel& m, const SparseVec& x,
                            const SparseVec& y) {
  DenseAccum acc(m.dim);
  for (const auto& [i, ci] : x.terms)
    for (const auto& [j, cj] : y.terms) {
      if (i == j) continue;
      acc.axpy(ci * cj, model_bracket(m, i, j));
    }
  return acc.to_sparse();
}

// ----- 28-dimensional model machinery -----

namespace {

void require_d4(const TensorModel& m, const char* who) {
  if (m.fam != Family::d4)
    throw std::invalid_argument(std::string(who) +
                                ": needs the 28-dimensional model");
}

// Slot relabeling 1 -> 2 -> 3 -> 1, 4 fixed.
int next_slot(int s) { return s == 4 ? 4 : (s % 3) + 1; }

}  // namespace

int theta_d4(const TensorModel& m, int index) {
  require_d4(m, "theta_d4");
  TensorModel::BasisRef r = m.decode(index);
  if (r.subset_pos == 0) return m.sp_index(next_slot(r.slot), r.gen);
  unsigned p = r.pattern;
  // New letters: slot 1 takes the old slot-3 letter, 2 takes 1, 3 takes 2.
  unsigned np = ((p >> 2) & 1u) | (((p >> 0) & 1u) << 1) |
                (((p >> 1) & 1u) << 2) | (p & 8u);
  return m.tensor_index(r.subset_pos, np);
}

Mat rho_matrix(const TensorModel& m, int index, int shift) {
  require_d4(m, "rho_matrix");
  int idx = index;
  int apps = (3 - shift % 3) % 3;  // theta^-shift as repeated theta
  for (int k = 0; k < apps; ++k) idx = theta_d4(m, idx);
  TensorModel::BasisRef r = m.decode(idx);
  Mat R = mat_zero(8, 8);
  if (r.subset_pos == 0) {
    // Slots 1 and 2 drive the two factors of the first octonion block,
    // slots 3 and 4 the second.
    int blk = r.slot <= 2 ? 0 : 1;
    bool first_factor = r.slot == 1 || r.slot == 3;
    Mat g = mat_zero(2, 2);
    if (r.gen == 0) g[0][1] = rat(1);
    else if (r.gen == 1) { g[0][0] = rat(1); g[1][1] = rat(-1); }
    else g[1][0] = rat(1);
    for (int c1 = 0; c1 < 2; ++c1)
      for (int c2 = 0; c2 < 2; ++c2) {
        int in = 4 * blk + 2 * c1 + c2;
        for (int t = 0; t < 2; ++t) {
          Rational coeff = first_factor ? g[t][c1] : g[t][c2];
          if (is_zero(coeff)) continue;
          int outi = first_factor ? 4 * blk + 2 * t + c2 : 4 * blk + 2 * c1 + t;
          R[outi][in] += coeff;
        }
      }
    return R;
  }
  int b1 = (int)((r.pattern >> 0) & 1u), b2 = (int)((r.pattern >> 1) & 1u);
  int b3 = (int)((r.pattern >> 2) & 1u), b4 = (int)((r.pattern >> 3) & 1u);
  // First block input lands in the second block and vice versa.
  for (int c1 = 0; c1 < 2; ++c1)
    for (int c2 = 0; c2 < 2; ++c2) {
      int s = sympl(b1, c1) * sympl(b2, c2);
      if (s != 0) R[4 + 2 * b3 + b4][2 * c1 + c2] += rat(-s);
    }
  for (int c3 = 0; c3 < 2; ++c3)
    for (int c4 = 0; c4 < 2; ++c4) {
      int s = sympl(b3, c3) * sympl(b4, c4);
      if (s != 0) R[2 * b1 + b2][4 + 2 * c3 + c4] += rat(s);
    }
  return R;
}

CheckReport theta_automorphism_check() {
  CheckReport report;
  TensorModel m = build_model(Family::d4);
  for (int i = 0; i < m.dim; ++i) {
    ++report.checked;
    int t = theta_d4(m, theta_d4(m, theta_d4(m, i)));
    if (t != i) report.fail("theta^3 moves basis element " + m.labels[i]);
  }
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j) {
      ++report.checked;
      SparseVec lhs;
      for (const auto& [k, c] : model_bracket(m, i, j).terms)
        lhs.add(theta_d4(m, k), c);
      SparseVec rhs = model_bracket(m, theta_d4(m, i), theta_d4(m, j));
      if (!(lhs == rhs))
        report.fail("theta breaks bracket at (" + m.labels[i] + ", " +
                    m.labels[j] + ")");
    }
  return report;
}

CheckReport rho_homomorphism_check() {
  CheckReport report;
  TensorModel m = build_model(Family::d4);
  std::vector<Mat> R(m.dim);
  for (int i = 0; i < m.dim; ++i) R[i] = rho_matrix(m, i, 0);
  for (int i = 0; i < m.dim; ++i)
    for (int j = i + 1; j < m.dim; ++j) {
      ++report.checked;
      Mat lhs = mat_commutator(R[i], R[j]);
      Mat rhs = mat_zero(8, 8);
      for (const auto& [k, c] : model_bracket(m, i, j).terms)
        rhs = mat_add(rhs, mat_scale(c, R[k]));
      if (!mat_is_zero(mat_sub(lhs, rhs)))
        report.fail("rho breaks bracket at (" + m.labels[i] + ", " +
                    m.labels[j] + ")");
    }
  return report;
}

CheckReport local_triality_check() {
  CheckReport report;
  TensorModel m = build_model(Family::d4);
  CompAlg oct = split_octonions();
  for (int i = 0; i < m.dim; ++i) {
    Mat R0 = rho_matrix(m, i, 0);
    Mat R1 = rho_matrix(m, i, 1);
    Mat R2 = rho_matrix(m, i, 2);
    for (int x = 0; x < 8; ++x)
      for (int y = 0; y < 8; ++y) {
        ++report.checked;
        Vec lhs = mat_apply(R0, oct.mult[x][y]);
        Vec r1x(8), r2y(8);
        for (int t = 0; t < 8; ++t) {
          r1x[t] = R1[t][x];
          r2y[t] = R2[t][y];
        }
        Vec rhs = vec_add(oct.product(r1x, oct.basis_vec(y)),
                          oct.product(oct.basis_vec(x), r2y));
        if (!vec_is_zero(vec_sub(lhs, rhs)))
          report.fail("derivation triple fails at (" + m.labels[i] + ", " +
                      oct.labels[x] + ", " + oct.labels[y] + ")");
      }
  }
  return report;
}

CheckReport rho_triality_span_check() {
  CheckReport report;
  TensorModel m = build_model(Family::d4);
  CompAlg oct = split_octonions();
  TrialityBasis tb = triality_algebra(oct);
  RowReducer span(3 * 8 * 8);
  for (int i = 0; i < m.dim; ++i) {
    ++report.checked;
    TriElement t{{rho_matrix(m, i, 0), rho_matrix(m, i, 1),
                  rho_matrix(m, i, 2)}};
    try {
      tb.coords(t);
    } catch (const std::runtime_error&) {
      report.fail("triple of " + m.labels[i] + " outside the triple algebra");
      continue;
    }
    span.insert(tb.flatten(t));
  }
  ++report.checked;
  if (span.rank() != tb.dim())
    report.fail("triples span rank " + std::to_string(span.rank()) +
                ", triple algebra has dim " + std::to_string(tb.dim()));
  return report;
}

CheckReport quaternion_triality_span_check() {
  CheckReport report;
  TensorModel m = build_model(Family::d4);
  CompAlg quat = symmetric_composition(4);
  TrialityBasis tb = triality_algebra(quat);
  RowReducer span(3 * 4 * 4);
  for (int slot = 1; slot <= 3; ++slot)
    for (int gen = 0; gen < 3; ++gen) {
      ++report.checked;
      int idx = m.sp_index(slot, gen);
      TriElement t = tri_zero(4);
      bool leak = false;
      for (int a = 0; a < 3; ++a) {
        Mat R = rho_matrix(m, idx, a);
        for (int r = 0; r < 8; ++r)
          for (int c = 0; c < 8; ++c) {
            bool inside = r < 4 && c < 4;
            if (inside)
              t.d[a][r][c] = R[r][c];
            else if ((r < 4) != (c < 4) && !is_zero(R[r][c]))
              leak = true;
          }
      }
      if (leak) {
        report.fail("triple of " + m.labels[idx] +
                    " mixes the two quaternion blocks");
        continue;
      }
      try {
        tb.coords(t);
      } catch (const std::runtime_error&) {
        report.fail("restricted triple of " + m.labels[idx] +
                    " outside the quaternion triple algebra");
        continue;
      }
      span.insert(tb.flatten(t));
    }
  ++report.checked;
  if (span.rank() != tb.dim())
    report.fail("restricted triples span rank " + std::to_string(span.rank()) +
                ", quaternion triple algebra has dim " +
                std::to_string(tb.dim()));
  return report;
}

CheckReport fixed_subalgebra_check() {
  CheckReport report;
  TensorModel m = build_model(Family::d4);
  RatMatrix sys(m.dim, m.dim);
  for (int j = 0; j < m.dim; ++j) {
    sys.row[theta_d4(m, j)].add(j, rat(1));
    sys.row[j].add(j, rat(-1));
  }
  std::vector<SparseVec> fixed = kernel_basis(sys);
  ++report.checked;
  if ((int)fixed.size() != 14)
    report.fail("fixed subalgebra has dim " + std::to_string(fixed.size()) +
                ", expected 14");
  RowReducer span(m.dim);
  for (const SparseVec& v : fixed) span.insert(v);
  for (size_t a = 0; a < fixed.size(); ++a)
    for (size_t b = a + 1; b < fixed.size(); ++b) {
      ++report.checked;
      SparseVec br = model_bracket_vec(m, fixed[a], fixed[b]);
      if (!span.contains(br))
        report.fail("fixed subalgebra not closed at pair (" +
                    std::to_string(a) + ", " + std::to_string(b) + ")");
    }
  return report;
}

}  // namespace msq
