#include <msq/comp_alg.hpp>

#include <cassert>
#include <stdexcept>

namespace msq {

namespace {

// Symplectic pairing on the 2-dimensional plane with basis v = 0, w = 1.
int sympl(int a, int b) {
  if (a == 0 && b == 1) return 1;
  if (a == 1 && b == 0) return -1;
  return 0;
}

std::string tensor_label(int a, int b) {
  return std::string(a ? "w" : "v") + (b ? "w" : "v");
}

}  // namespace

Vec CompAlg::basis_vec(int i) const {
  Vec e = vec_zero(dim);
  e[i] = 1;
  return e;
}

Vec CompAlg::product(const Vec& x, const Vec& y) const {
  Vec out = vec_zero(dim);
  for (int i = 0; i < dim; ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < dim; ++j) {
      if (is_zero(y[j])) continue;
      Rational c = x[i] * y[j];
      const Vec& m = mult[i][j];
      for (int r = 0; r < dim; ++r)
        if (!is_zero(m[r])) out[r] += c * m[r];
    }
  }
  return out;
}

Rational CompAlg::polar(const Vec& x, const Vec& y) const {
  Rational out = 0;
  for (int i = 0; i < dim; ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < dim; ++j)
      if (!is_zero(gram[i][j]) && !is_zero(y[j])) out += x[i] * gram[i][j] * y[j];
  }
  return out;
}

Rational CompAlg::quad(const Vec& x) const { return polar(x, x) / 2; }

Mat CompAlg::left_mult(const Vec& x) const {
  Mat out = mat_zero(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) {
      if (is_zero(x[i])) continue;
      const Vec& m = mult[i][j];
      for (int r = 0; r < dim; ++r)
        if (!is_zero(m[r])) out[r][j] += x[i] * m[r];
    }
  return out;
}

Mat CompAlg::right_mult(const Vec& x) const {
  Mat out = mat_zero(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) {
      if (is_zero(x[i])) continue;
      const Vec& m = mult[j][i];
      for (int r = 0; r < dim; ++r)
        if (!is_zero(m[r])) out[r][j] += x[i] * m[r];
    }
  return out;
}

Vec CompAlg::conjugate(const Vec& x) const {
  assert(!unit.empty());
  return vec_sub(vec_scale(polar(x, unit), unit), x);
}

CompAlg ground_field() {
  CompAlg a;
  a.name = "F";
  a.dim = 1;
  a.labels = {"1"};
  a.gram = {{Rational(2)}};
  a.mult = {{{Rational(1)}}};
  a.unit = {Rational(1)};
  a.unital = true;
  return a;
}

CompAlg split_binarions() {
  CompAlg a;
  a.name = "K";
  a.dim = 2;
  a.labels = {"e+", "e-"};
  a.gram = mat_zero(2, 2);
  a.gram[0][1] = a.gram[1][0] = 1;
  a.mult.assign(2, std::vector<Vec>(2, vec_zero(2)));
  a.mult[0][0][0] = 1;  // componentwise product of the two scalar slots
  a.mult[1][1][1] = 1;
  a.unit = {Rational(1), Rational(1)};
  a.unital = true;
  return a;
}

CompAlg split_quaternions() {
  CompAlg a;
  a.name = "Q";
  a.dim = 4;
  a.labels.resize(4);
  a.gram = mat_zero(4, 4);
  a.mult.assign(4, std::vector<Vec>(4, vec_zero(4)));
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q) a.labels[2 * p + q] = tensor_label(p, q);
  // The plane's rank-one tensors: (a@b)(c@d) = <a|d> c@b, with the form
  // pairing (a@b, c@d) to <a|c><b|d>; the unit is v@w - w@v.
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q)
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) {
          a.gram[2 * p + q][2 * r + s] = sympl(p, r) * sympl(q, s);
          int c = sympl(p, s);
          if (c != 0) a.mult[2 * p + q][2 * r + s][2 * r + q] = c;
        }
  a.unit = {Rational(0), Rational(1), Rational(-1), Rational(0)};
  a.unital = true;
  return a;
}

CompAlg cayley_dickson_double(const CompAlg& base) {
  if (!base.unital)
    throw std::invalid_argument("doubling needs a unital algebra");
  int n = base.dim;
  CompAlg a;
  a.name = "CD(" + base.name + ")";
  a.dim = 2 * n;
  a.labels.resize(2 * n);
  for (int i = 0; i < n; ++i) {
    a.labels[i] = base.labels[i] + "0";
    a.labels[n + i] = base.labels[i] + "1";
  }
  a.gram = mat_zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a.gram[i][j] = base.gram[i][j];
      a.gram[n + i][n + j] = base.gram[i][j];
    }
  std::vector<Vec> conj(n);
  for (int i = 0; i < n; ++i) conj[i] = base.conjugate(base.basis_vec(i));
  auto embed = [&](const Vec& x, int slot) {
    Vec out = vec_zero(2 * n);
    for (int r = 0; r < n; ++r) out[slot * n + r] = x[r];
    return out;
  };
  a.mult.assign(2 * n, std::vector<Vec>(2 * n, vec_zero(2 * n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec bi = base.basis_vec(i), bj = base.basis_vec(j);
      // (x,y)(x',y') = (x x' - conj(y') y, y' x + y conj(x'))
      a.mult[i][j] = embed(base.mult[i][j], 0);
      a.mult[i][n + j] = embed(base.product(bj, bi), 1);
      a.mult[n + i][j] = embed(base.product(bi, conj[j]), 1);
      a.mult[n + i][n + j] =
          embed(vec_scale(Rational(-1), base.product(conj[j], bi)), 0);
    }
  a.unit = embed(base.unit, 0);
  a.unital = true;
  return a;
}

CompAlg para_hurwitz(const CompAlg& base) {
  if (!base.unital)
    throw std::invalid_argument("the twist needs a unital algebra");
  CompAlg a = base;
  a.name = "para(" + base.name + ")";
  a.unital = false;
  std::vector<Vec> conj(base.dim);
  for (int i = 0; i < base.dim; ++i)
    conj[i] = base.conjugate(base.basis_vec(i));
  for (int i = 0; i < base.dim; ++i)
    for (int j = 0; j < base.dim; ++j)
      a.mult[i][j] = base.product(conj[i], conj[j]);
  return a;
}

CompAlg split_octonions() {
  CompAlg a;
  a.name = "para(O)";
  a.dim = 8;
  a.labels.resize(8);
  a.gram = mat_zero(8, 8);
  a.mult.assign(8, std::vector<Vec>(8, vec_zero(8)));
  auto idx = [](int slot, int p, int q) { return 4 * slot + 2 * p + q; };
  for (int s = 0; s < 2; ++s)
    for (int p = 0; p < 2; ++p)
      for (int q = 0; q < 2; ++q)
        a.labels[idx(s, p, q)] = tensor_label(p, q) + std::to_string(s);
  for (int s = 0; s < 2; ++s)
    for (int p = 0; p < 2; ++p)
      for (int q = 0; q < 2; ++q)
        for (int r = 0; r < 2; ++r)
          for (int t = 0; t < 2; ++t)
            a.gram[idx(s, p, q)][idx(s, r, t)] = sympl(p, r) * sympl(q, t);
  // Product of (a@b, c@d) and (a'@b', c'@d'):
  //   (<b|a'> b'@a - <d|d'> c@c', -<a|c'> b@d' - <c|b'> a'@d)
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q)
      for (int r = 0; r < 2; ++r)
        for (int t = 0; t < 2; ++t) {
          int c;
          c = sympl(q, r);  // slot0 . slot0 -> slot0, <b|a'> b'@a
          if (c) a.mult[idx(0, p, q)][idx(0, r, t)][idx(0, t, p)] = c;
          c = -sympl(p, r);  // slot0 . slot1 -> slot1, -<a|c'> b@d'
          if (c) a.mult[idx(0, p, q)][idx(1, r, t)][idx(1, q, t)] = c;
          c = -sympl(p, t);  // slot1 . slot0 -> slot1, -<c|b'> a'@d
          if (c) a.mult[idx(1, p, q)][idx(0, r, t)][idx(1, r, q)] = c;
          c = -sympl(q, t);  // slot1 . slot1 -> slot0, -<d|d'> c@c'
          if (c) a.mult[idx(1, p, q)][idx(1, r, t)][idx(0, p, r)] = c;
        }
  a.unit = vec_zero(8);
  a.unit[1] = 1;
  a.unit[2] = -1;
  a.unital = false;
  return a;
}

CompAlg symmetric_composition(int dim) {
  CompAlg a;
  switch (dim) {
    case 1: a = ground_field(); break;
    case 2: a = para_hurwitz(split_binarions()); break;
    case 4: a = para_hurwitz(split_quaternions()); break;
    case 8: a = split_octonions(); break;
    default:
      throw std::invalid_argument("no split symmetric composition algebra "
                                  "of dimension " + std::to_string(dim));
  }
  a.name = "S" + std::to_string(dim);
  return a;
}

CheckReport check_composition(const CompAlg& a) {
  CheckReport report;
  int n = a.dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ++report.checked;
      if (a.gram[i][j] != a.gram[j][i])
        report.fail(a.name + ": Gram matrix not symmetric at (" +
                    std::to_string(i) + "," + std::to_string(j) + ")");
    }
  RatMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!is_zero(a.gram[i][j])) g.set(i, j, a.gram[i][j]);
  ++report.checked;
  if (rank(g) != n) report.fail(a.name + ": form is degenerate");
  if (a.unital) {
    for (int i = 0; i < n; ++i) {
      ++report.checked;
      Vec b = a.basis_vec(i);
      if (a.product(a.unit, b) != b || a.product(b, a.unit) != b)
        report.fail(a.name + ": unit fails on basis vector " + a.labels[i]);
    }
  }
  // q(xy, zw) + q(xw, zy) = q(x,z) q(y,w), the composition law with all
  // four slots linearized.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          ++report.checked;
          Rational lhs = a.polar(a.mult[i][j], a.mult[k][l]) +
                         a.polar(a.mult[i][l], a.mult[k][j]);
          if (lhs != a.gram[i][k] * a.gram[j][l])
            report.fail(a.name + ": composition law fails at (" +
                        a.labels[i] + "," + a.labels[j] + "," + a.labels[k] +
                        "," + a.labels[l] + ")");
        }
  return report;
}

CheckReport check_symmetric(const CompAlg& a) {
  CheckReport report;
  int n = a.dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec bi = a.basis_vec(i), bj = a.basis_vec(j), bk = a.basis_vec(k);
        ++report.checked;
        if (a.polar(a.mult[i][j], bk) != a.polar(bi, a.mult[j][k]))
          report.fail(a.name + ": form not associative at (" + a.labels[i] +
                      "," + a.labels[j] + "," + a.labels[k] + ")");
        // (xy)z + (zy)x = q(x,z) y = x(yz) + z(yx)
        Vec want = vec_scale(a.gram[i][k], bj);
        ++report.checked;
        Vec lhs = vec_add(a.product(a.mult[i][j], bk),
                          a.product(a.mult[k][j], bi));
        if (lhs != want)
          report.fail(a.name + ": left cancellation fails at (" +
                      a.labels[i] + "," + a.labels[j] + "," + a.labels[k] +
                      ")");
        ++report.checked;
        Vec rhs = vec_add(a.product(bi, a.mult[j][k]),
                          a.product(bk, a.mult[j][i]));
        if (rhs != want)
          report.fail(a.name + ": right cancellation fails at (" +
                      a.labels[i] + "," + a.labels[j] + "," + a.labels[k] +
                      ")");
      }
  return report;
}

Mat sigma_op(const CompAlg& a, const Vec& x, const Vec& y) {
  int n = a.dim;
  Mat out = mat_zero(n, n);
  for (int k = 0; k < n; ++k) {
    Rational qx = a.polar(x, a.basis_vec(k));
    Rational qy = a.polar(y, a.basis_vec(k));
    for (int r = 0; r < n; ++r) out[r][k] = qx * y[r] - qy * x[r];
  }
  return out;
}

std::vector<Mat> orth_basis(const CompAlg& a) {
  int n = a.dim;
  RatMatrix constraints(0, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      SparseVec row;
      DenseAccum acc(n * n);
      acc.reset();
      for (int k = 0; k < n; ++k) {
        if (!is_zero(a.gram[k][j])) acc.add(k * n + i, a.gram[k][j]);
        if (!is_zero(a.gram[i][k])) acc.add(k * n + j, a.gram[i][k]);
      }
      constraints.add_row(acc.to_sparse());
    }
  std::vector<SparseVec> ker = kernel_basis(constraints);
  std::vector<Mat> out;
  for (const auto& v : ker) {
    Mat m = mat_zero(n, n);
    for (const auto& [idx, c] : v.terms) m[idx / n][idx % n] = c;
    out.push_back(std::move(m));
  }
  return out;
}

TriElement tri_zero(int n) {
  return {{mat_zero(n, n), mat_zero(n, n), mat_zero(n, n)}};
}

TriElement tri_add(const TriElement& a, const TriElement& b) {
  return {{mat_add(a.d[0], b.d[0]), mat_add(a.d[1], b.d[1]),
           mat_add(a.d[2], b.d[2])}};
}

TriElement tri_scale(const Rational& c, const TriElement& a) {
  return {{mat_scale(c, a.d[0]), mat_scale(c, a.d[1]), mat_scale(c, a.d[2])}};
}

TriElement tri_commutator(const TriElement& a, const TriElement& b) {
  return {{mat_commutator(a.d[0], b.d[0]), mat_commutator(a.d[1], b.d[1]),
           mat_commutator(a.d[2], b.d[2])}};
}

TriElement tri_shift(const TriElement& a) { return {{a.d[2], a.d[0], a.d[1]}}; }

bool tri_is_zero(const TriElement& a) {
  return mat_is_zero(a.d[0]) && mat_is_zero(a.d[1]) && mat_is_zero(a.d[2]);
}

bool tri_equal(const TriElement& a, const TriElement& b) {
  return a.d[0] == b.d[0] && a.d[1] == b.d[1] && a.d[2] == b.d[2];
}

TriElement t_element(const CompAlg& a, const Vec& x, const Vec& y) {
  int n = a.dim;
  Rational half = a.polar(x, y) / 2;
  Mat half_id = mat_scale(half, mat_identity(n));
  TriElement t;
  t.d[0] = sigma_op(a, x, y);
  t.d[1] = mat_sub(half_id, mat_mul(a.right_mult(x), a.left_mult(y)));
  t.d[2] = mat_sub(half_id, mat_mul(a.left_mult(x), a.right_mult(y)));
  return t;
}

SparseVec TrialityBasis::flatten(const TriElement& t) const {
  SparseVec v;
  for (int c = 0; c < 3; ++c)
    for (int r = 0; r < n; ++r)
      for (int col = 0; col < n; ++col)
        if (!is_zero(t.d[c][r][col]))
          v.terms.emplace_back(c * n * n + r * n + col, t.d[c][r][col]);
  return v;
}

TriElement TrialityBasis::unflatten(const SparseVec& v) const {
  TriElement t = tri_zero(n);
  for (const auto& [idx, c] : v.terms)
    t.d[idx / (n * n)][(idx / n) % n][idx % n] = c;
  return t;
}

std::vector<Rational> TrialityBasis::coords(const TriElement& t) const {
  SparseVec target = flatten(t);
  std::vector<Rational> out(elems.size(), Rational(0));
  SparseVec rebuilt;
  for (size_t k = 0; k < elems.size(); ++k) {
    out[k] = target.get(pivot[k]);
    if (!is_zero(out[k])) rebuilt.axpy(out[k], flat[k]);
  }
  if (!(rebuilt == target))
    throw std::runtime_error("operator triple outside the related-triple "
                             "algebra");
  return out;
}

TrialityBasis triality_algebra(const CompAlg& a) {
  int n = a.dim, nn = n * n;
  RatMatrix constraints(0, 3 * nn);
  auto at = [&](int c, int r, int col) { return c * nn + r * n + col; };
  // Each component skew for the form: sum_k D[k][i] G[k][j] + G[i][k] D[k][j].
  for (int c = 0; c < 3; ++c)
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        DenseAccum acc(3 * nn);
        acc.reset();
        for (int k = 0; k < n; ++k) {
          if (!is_zero(a.gram[k][j])) acc.add(at(c, k, i), a.gram[k][j]);
          if (!is_zero(a.gram[i][k])) acc.add(at(c, k, j), a.gram[i][k]);
        }
        constraints.add_row(acc.to_sparse());
      }
  // d0(xy) = d1(x)y + x d2(y) on basis pairs, one row per output coordinate.
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int m = 0; m < n; ++m) {
        DenseAccum acc(3 * nn);
        acc.reset();
        const Vec& xpq = a.mult[p][q];
        for (int t = 0; t < n; ++t) {
          if (!is_zero(xpq[t])) acc.add(at(0, m, t), xpq[t]);
          if (!is_zero(a.mult[t][q][m])) acc.add(at(1, t, p), -a.mult[t][q][m]);
          if (!is_zero(a.mult[p][t][m])) acc.add(at(2, t, q), -a.mult[p][t][m]);
        }
        constraints.add_row(acc.to_sparse());
      }
  TrialityBasis basis;
  basis.n = n;
  basis.flat = kernel_basis(constraints);
  for (const auto& v : basis.flat) {
    basis.elems.push_back(basis.unflatten(v));
    basis.pivot.push_back(v.terms.front().first);
  }
  return basis;
}

}  // namespace msq
