#include <msq/roots.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace msq {

bool WeightSpace::zero() const {
  for (const Rational& w : weight)
    if (!is_zero(w)) return false;
  return true;
}

const WeightSpace* RootDatum::zero_space() const {
  for (const WeightSpace& s : spaces)
    if (s.zero()) return &s;
  return nullptr;
}

long RootDatum::root_count() const {
  long n = 0;
  for (const WeightSpace& s : spaces)
    if (!s.zero()) n += (long)s.members.size();
  return n;
}

std::vector<std::vector<Rational>> RootDatum::root_vectors() const {
  std::vector<std::vector<Rational>> out;
  for (const WeightSpace& s : spaces) {
    if (s.zero()) continue;
    for (size_t k = 0; k < s.members.size(); ++k) out.push_back(s.weight);
  }
  std::sort(out.begin(), out.end());
  return out;
}

RootDatum root_datum(const TensorModel& m, const StructureConstants& sc) {
  RootDatum rd;
  for (int s : m.slots) {
    CartanElement c;
    c.index = m.sp_index(s, 1);
    c.sign = -1;
    c.label = "g" + std::to_string(s);
    rd.cartan.push_back(c);
  }
  for (int t = 0; t < (int)m.torus.size(); ++t) {
    CartanElement c;
    c.index = m.torus_index(t);
    c.sign = 1;
    c.label = m.labels[c.index];
    rd.cartan.push_back(c);
  }
  std::vector<std::vector<SparseVec>> maps;
  for (const CartanElement& c : rd.cartan) {
    std::vector<SparseVec> cols = sc.ad_columns(c.index);
    if (c.sign < 0)
      for (SparseVec& col : cols) col *= rat(-1);
    maps.push_back(std::move(cols));
  }
  for (const EigenGroup& g : simultaneous_eigensplit(maps, sc.dim)) {
    WeightSpace ws;
    ws.weight = g.value;
    ws.members = g.members;
    rd.spaces.push_back(std::move(ws));
  }
  return rd;
}

namespace {

bool lex_positive(const std::vector<Rational>& v) {
  for (int i = (int)v.size() - 1; i >= 0; --i)
    if (!is_zero(v[i])) return sgn(v[i]) > 0;
  return false;
}

}  // namespace

std::vector<std::vector<Rational>> simple_roots(const RootDatum& rd) {
  std::vector<std::vector<Rational>> pos;
  for (const auto& v : rd.root_vectors())
    if (lex_positive(v)) pos.push_back(v);
  std::set<std::vector<Rational>> pos_set(pos.begin(), pos.end());
  std::vector<std::vector<Rational>> out;
  for (const auto& a : pos) {
    bool decomposable = false;
    for (const auto& b : pos) {
      if (b == a) continue;
      std::vector<Rational> rest(a.size());
      for (size_t i = 0; i < a.size(); ++i) rest[i] = a[i] - b[i];
      if (pos_set.count(rest)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<Rational>> cartan_matrix(
    const RootDatum& rd, const Mat& killing,
    const std::vector<std::vector<Rational>>& roots) {
  int r = rd.rank();
  Mat kc = mat_zero(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      kc[i][j] = rat(rd.cartan[i].sign * rd.cartan[j].sign) *
                 killing[rd.cartan[i].index][rd.cartan[j].index];
  Mat kinv = mat_inverse(kc);
  auto inner = [&](const std::vector<Rational>& a,
                   const std::vector<Rational>& b) {
    Rational s = 0;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) s += a[i] * kinv[i][j] * b[j];
    return s;
  };
  int n = (int)roots.size();
  std::vector<std::vector<Rational>> cm(n, std::vector<Rational>(n));
  for (int j = 0; j < n; ++j) {
    Rational nj = inner(roots[j], roots[j]);
    if (is_zero(nj)) throw std::runtime_error("cartan_matrix: null root");
    for (int i = 0; i < n; ++i)
      cm[i][j] = rat(2) * inner(roots[i], roots[j]) / nj;
  }
  return cm;
}

RootCensus classify_roots(const RootDatum& rd) {
  RootCensus census;
  for (const auto& v : rd.root_vectors()) {
    int nonzero = 0;
    bool all_one = true, two = false;
    for (const Rational& c : v) {
      if (is_zero(c)) continue;
      ++nonzero;
      if (!(c == rat(1) || c == rat(-1))) all_one = false;
      if (c == rat(2) || c == rat(-2)) two = true;
    }
    if (nonzero == 1 && two)
      ++census.sp_like;
    else if (nonzero >= 2 && all_one)
      ++census.pattern_like;
    else
      ++census.other;
  }
  return census;
}

}  // namespace msq
