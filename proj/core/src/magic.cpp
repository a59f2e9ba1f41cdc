#include <msq/magic.hpp>

#include <msq/roots.hpp>

#include <algorithm>
#include <map>
#include <utility>

namespace msq {

namespace {

// Coordinates of the shifted pair elements t_{b_p, b_r} of one factor in its
// triple-algebra basis, indexed [shift][p][r] for p < r. The diagonal
// vanishes identically and swapped pairs flip sign, so only p < r is kept.
struct PairCache {
  std::vector<std::vector<std::vector<std::vector<Rational>>>> coords;
};

PairCache make_pair_cache(const CompAlg& a, const TrialityBasis& tb) {
  PairCache pc;
  pc.coords.assign(
      3, std::vector<std::vector<std::vector<Rational>>>(
             a.dim, std::vector<std::vector<Rational>>(a.dim)));
  for (int p = 0; p < a.dim; ++p)
    for (int r = p + 1; r < a.dim; ++r) {
      TriElement t = t_element(a, a.basis_vec(p), a.basis_vec(r));
      for (int shift = 0; shift < 3; ++shift) {
        pc.coords[shift][p][r] = tb.coords(t);
        t = tri_shift(t);
      }
    }
  return pc;
}

}  // namespace

MagicAlgebra build_magic(const CompAlg& S, const CompAlg& Sp) {
  for (const CompAlg* a : {&S, &Sp})
    if (!check_composition(*a).pass || !check_symmetric(*a).pass)
      throw NotSymmetricComposition(a->name +
                                    " is not a symmetric composition algebra");
  MagicAlgebra g;
  g.S = S;
  g.Sp = Sp;
  g.triS = triality_algebra(S);
  g.triSp = triality_algebra(Sp);
  const int ta = g.triS.dim();
  const int tb = g.triSp.dim();
  const int dim = ta + tb + 3 * S.dim * Sp.dim;
  g.sc.name = "magic:" + std::to_string(S.dim) + "x" + std::to_string(Sp.dim);
  g.sc.dim = dim;
  g.sc.labels.resize(dim);
  g.sc.degree.assign(dim, 0u);
  for (int k = 0; k < ta; ++k)
    g.sc.labels[g.tri_index(k)] = "tri[" + std::to_string(k) + "]";
  for (int k = 0; k < tb; ++k)
    g.sc.labels[g.trip_index(k)] = "tri'[" + std::to_string(k) + "]";
  for (int i = 0; i < 3; ++i)
    for (int p = 0; p < S.dim; ++p)
      for (int q = 0; q < Sp.dim; ++q) {
        int idx = g.iota_index(i, p, q);
        g.sc.labels[idx] = "i" + std::to_string(i) + "(" + S.labels[p] + "," +
                           Sp.labels[q] + ")";
        g.sc.degree[idx] = (unsigned)(i + 1);
      }
  g.sc.table.assign((size_t)dim * dim, SparseVec{});

  auto fill = [&](int i, int j, SparseVec v) {
    if (!v.terms.empty()) g.sc.table[(size_t)i * dim + j] = std::move(v);
  };

  // Triple algebras close under the componentwise commutator; the two sides
  // commute with each other, so those pairs stay empty.
  for (int k = 0; k < ta; ++k)
    for (int l = k + 1; l < ta; ++l) {
      std::vector<Rational> co =
          g.triS.coords(tri_commutator(g.triS.elems[k], g.triS.elems[l]));
      SparseVec v;
      for (int u = 0; u < ta; ++u)
        if (!is_zero(co[u])) v.set(g.tri_index(u), co[u]);
      fill(g.tri_index(k), g.tri_index(l), std::move(v));
    }
  for (int k = 0; k < tb; ++k)
    for (int l = k + 1; l < tb; ++l) {
      std::vector<Rational> co =
          g.triSp.coords(tri_commutator(g.triSp.elems[k], g.triSp.elems[l]));
      SparseVec v;
      for (int u = 0; u < tb; ++u)
        if (!is_zero(co[u])) v.set(g.trip_index(u), co[u]);
      fill(g.trip_index(k), g.trip_index(l), std::move(v));
    }

  // A triple acts on copy i through its component i, on the matching tensor
  // factor.
  for (int k = 0; k < ta; ++k) {
    const TriElement& d = g.triS.elems[k];
    for (int i = 0; i < 3; ++i)
      for (int p = 0; p < S.dim; ++p)
        for (int q = 0; q < Sp.dim; ++q) {
          SparseVec v;
          for (int u = 0; u < S.dim; ++u)
            if (!is_zero(d.d[i][u][p])) v.set(g.iota_index(i, u, q), d.d[i][u][p]);
          fill(g.tri_index(k), g.iota_index(i, p, q), std::move(v));
        }
  }
  for (int k = 0; k < tb; ++k) {
    const TriElement& d = g.triSp.elems[k];
    for (int i = 0; i < 3; ++i)
      for (int p = 0; p < S.dim; ++p)
        for (int q = 0; q < Sp.dim; ++q) {
          SparseVec v;
          for (int u = 0; u < Sp.dim; ++u)
            if (!is_zero(d.d[i][u][q])) v.set(g.iota_index(i, p, u), d.d[i][u][q]);
          fill(g.trip_index(k), g.iota_index(i, p, q), std::move(v));
        }
  }

  // Same copy: the product lands back in the triple algebras, weighted by
  // the two polar forms.
  PairCache cs = make_pair_cache(S, g.triS);
  PairCache cp = make_pair_cache(Sp, g.triSp);
  const int block = S.dim * Sp.dim;
  for (int i = 0; i < 3; ++i)
    for (int pq = 0; pq < block; ++pq)
      for (int rs = pq + 1; rs < block; ++rs) {
        int p = pq / Sp.dim, q = pq % Sp.dim;
        int r = rs / Sp.dim, s = rs % Sp.dim;
        SparseVec v;
        const Rational& qx = Sp.gram[q][s];
        if (!is_zero(qx) && p != r) {
          const std::vector<Rational>& co =
              p < r ? cs.coords[i][p][r] : cs.coords[i][r][p];
          Rational c = p < r ? qx : -qx;
          for (int u = 0; u < ta; ++u)
            if (!is_zero(co[u])) v.add(g.tri_index(u), c * co[u]);
        }
        const Rational& qa = S.gram[p][r];
        if (!is_zero(qa) && q != s) {
          const std::vector<Rational>& co =
              q < s ? cp.coords[i][q][s] : cp.coords[i][s][q];
          Rational c = q < s ? qa : -qa;
          for (int u = 0; u < tb; ++u)
            if (!is_zero(co[u])) v.add(g.trip_index(u), c * co[u]);
        }
        fill(g.iota_index(i, p, q), g.iota_index(i, r, s), std::move(v));
      }

  // Distinct copies: multiply into the third copy, componentwise. The
  // (0,2) order is the reversed form of the (2,0) rule.
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      bool fwd = j == (i + 1) % 3;
      int target = fwd ? (j + 1) % 3 : (i + 1) % 3;
      Rational sign = fwd ? rat(1) : rat(-1);
      for (int p = 0; p < S.dim; ++p)
        for (int q = 0; q < Sp.dim; ++q)
          for (int r = 0; r < S.dim; ++r)
            for (int s = 0; s < Sp.dim; ++s) {
              const Vec& pa = fwd ? S.mult[p][r] : S.mult[r][p];
              const Vec& px = fwd ? Sp.mult[q][s] : Sp.mult[s][q];
              SparseVec v;
              for (int u = 0; u < S.dim; ++u) {
                if (is_zero(pa[u])) continue;
                for (int w = 0; w < Sp.dim; ++w)
                  if (!is_zero(px[w]))
                    v.add(g.iota_index(target, u, w), sign * pa[u] * px[w]);
              }
              fill(g.iota_index(i, p, q), g.iota_index(j, r, s), std::move(v));
            }
    }
  return g;
}

MagicAlgebra build_magic(int dim_s, int dim_sp) {
  return build_magic(symmetric_composition(dim_s),
                     symmetric_composition(dim_sp));
}

StructureConstants build_g(const CompAlg& S, const CompAlg& Sp) {
  return std::move(build_magic(S, Sp).sc);
}

CheckReport copy_shift_automorphism_check(const MagicAlgebra& g) {
  CheckReport report;
  const int dim = g.sc.dim;
  std::vector<SparseVec> phi(dim);
  for (int k = 0; k < g.triS.dim(); ++k) {
    std::vector<Rational> co = g.triS.coords(tri_shift(g.triS.elems[k]));
    for (int u = 0; u < g.triS.dim(); ++u)
      if (!is_zero(co[u])) phi[g.tri_index(k)].set(g.tri_index(u), co[u]);
  }
  for (int k = 0; k < g.triSp.dim(); ++k) {
    std::vector<Rational> co = g.triSp.coords(tri_shift(g.triSp.elems[k]));
    for (int u = 0; u < g.triSp.dim(); ++u)
      if (!is_zero(co[u])) phi[g.trip_index(k)].set(g.trip_index(u), co[u]);
  }
  for (int i = 0; i < 3; ++i)
    for (int p = 0; p < g.S.dim; ++p)
      for (int q = 0; q < g.Sp.dim; ++q)
        phi[g.iota_index(i, p, q)] =
            SparseVec::unit(g.iota_index((i + 1) % 3, p, q));

  DenseAccum acc(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      ++report.checked;
      acc.reset();
      for (const auto& [t, c] : g.sc.upper(i, j).terms) acc.axpy(c, phi[t]);
      SparseVec lhs = acc.to_sparse();
      SparseVec rhs = g.sc.bracket_vec(phi[i], phi[j]);
      if (!(lhs == rhs))
        report.fail("copy shift breaks bracket at (" + g.sc.labels[i] + ", " +
                    g.sc.labels[j] + ")");
    }
  return report;
}

namespace {

// Commuting triple-algebra elements with every component diagonal on the
// standard basis. For dims 8 and 4 these are the slot generators carried
// through the triality representation (negated to line up with the tensor
// models' Cartan convention); dim 2's triple algebra is abelian and serves
// whole; dim 1 has no triples at all.
std::vector<TriElement> diagonal_cartan_triples(const CompAlg& a,
                                                const TrialityBasis& tb) {
  std::vector<TriElement> out;
  if (a.dim == 1) return out;
  if (a.dim == 2) return tb.elems;
  TensorModel m = build_model(Family::d4);
  int top = a.dim == 8 ? 4 : 3;
  for (int s = 1; s <= top; ++s) {
    TriElement t = tri_zero(a.dim);
    for (int comp = 0; comp < 3; ++comp) {
      Mat R = rho_matrix(m, m.sp_index(s, 1), comp);
      for (int r = 0; r < a.dim; ++r)
        for (int c = 0; c < a.dim; ++c) t.d[comp][r][c] = -R[r][c];
    }
    out.push_back(std::move(t));
  }
  return out;
}

bool all_components_diagonal(const TriElement& t) {
  for (const Mat& m : t.d)
    for (size_t r = 0; r < m.size(); ++r)
      for (size_t c = 0; c < m[r].size(); ++c)
        if (r != c && !is_zero(m[r][c])) return false;
  return true;
}

// One weight subspace of a triple-algebra block during refinement. The
// basis stays in echelon form against `pivots`, so coordinates along the
// subspace are direct reads.
struct BlockSpace {
  std::vector<Rational> weight;
  std::vector<SparseVec> basis;
  std::vector<int> pivots;
};

const std::pair<long, long> kEigenCandidates[] = {
    {0, 1}, {1, 2}, {-1, 2}, {1, 1}, {-1, 1}, {3, 2}, {-3, 2}, {2, 1}, {-2, 1}};

bool refine_block(const std::vector<TriElement>& cartans,
                  const TrialityBasis& tb, std::vector<BlockSpace>& result) {
  const int n = tb.dim();
  result.clear();
  BlockSpace whole;
  for (int k = 0; k < n; ++k) {
    whole.basis.push_back(SparseVec::unit(k));
    whole.pivots.push_back(k);
  }
  result.push_back(std::move(whole));
  for (const TriElement& cart : cartans) {
    std::vector<std::vector<Rational>> img(n);
    for (int k = 0; k < n; ++k) {
      try {
        img[k] = tb.coords(tri_commutator(cart, tb.elems[k]));
      } catch (const std::runtime_error&) {
        return false;
      }
    }
    std::vector<BlockSpace> next;
    for (BlockSpace& sub : result) {
      const int k = (int)sub.basis.size();
      RatMatrix restr(k, k);
      for (int j = 0; j < k; ++j) {
        std::vector<Rational> w(n, Rational(0));
        for (const auto& [t, c] : sub.basis[j].terms)
          for (int u = 0; u < n; ++u) w[u] += c * img[t][u];
        std::vector<Rational> co(k);
        for (int mrow = 0; mrow < k; ++mrow) co[mrow] = w[sub.pivots[mrow]];
        for (int mrow = 0; mrow < k; ++mrow) {
          if (is_zero(co[mrow])) continue;
          for (const auto& [t, c] : sub.basis[mrow].terms)
            w[t] -= co[mrow] * c;
          restr.set(mrow, j, co[mrow]);
        }
        for (int u = 0; u < n; ++u)
          if (!is_zero(w[u])) return false;  // image escapes the subspace
      }
      int found = 0;
      for (const auto& [num, den] : kEigenCandidates) {
        Rational lambda = rat(num, den);
        RatMatrix shifted = restr;
        for (int d = 0; d < k; ++d)
          shifted.set(d, d, shifted.get(d, d) - lambda);
        std::vector<SparseVec> ker = kernel_basis(shifted);
        if (ker.empty()) continue;
        BlockSpace ns;
        ns.weight = sub.weight;
        ns.weight.push_back(lambda);
        DenseAccum acc(n);
        for (const SparseVec& kv : ker) {
          acc.reset();
          for (const auto& [mrow, c] : kv.terms) acc.axpy(c, sub.basis[mrow]);
          ns.basis.push_back(acc.to_sparse());
          ns.pivots.push_back(sub.pivots[kv.terms.front().first]);
        }
        found += (int)ker.size();
        next.push_back(std::move(ns));
      }
      if (found != k) return false;  // spectrum outside the candidate list
    }
    result = std::move(next);
  }
  return true;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Sorted pairing profiles: for each root, the sorted list of its pairings
// 2(a,b)/(b,b) against every root, the whole collection sorted. Equal
// profiles are a basis-independent necessary condition for the two root
// systems to be the same.
bool pairing_profiles(const std::vector<std::vector<Rational>>& roots,
                      const Mat& kc,
                      std::vector<std::vector<Rational>>& out) {
  Mat kinv;
  try {
    kinv = mat_inverse(kc);
  } catch (const std::runtime_error&) {
    return false;
  }
  const int n = (int)roots.size();
  std::vector<Vec> dual(n);
  Vec norm(n);
  for (int j = 0; j < n; ++j) {
    dual[j] = mat_apply(kinv, roots[j]);
    norm[j] = dot(roots[j], dual[j]);
    if (is_zero(norm[j])) return false;
  }
  out.assign(n, {});
  for (int i = 0; i < n; ++i) {
    out[i].resize(n);
    for (int j = 0; j < n; ++j)
      out[i][j] = rat(2) * dot(roots[i], dual[j]) / norm[j];
    std::sort(out[i].begin(), out[i].end());
  }
  std::sort(out.begin(), out.end());
  return true;
}

}  // namespace

long MagicRoots::root_count() const {
  long n = 0;
  for (const Space& s : spaces) {
    bool zero = true;
    for (const Rational& w : s.weight)
      if (!is_zero(w)) {
        zero = false;
        break;
      }
    if (!zero) n += s.dim;
  }
  return n;
}

MagicRoots magic_roots(const MagicAlgebra& g) {
  MagicRoots out;
  std::vector<TriElement> cs = diagonal_cartan_triples(g.S, g.triS);
  std::vector<TriElement> cp = diagonal_cartan_triples(g.Sp, g.triSp);
  const int ns = (int)cs.size(), np = (int)cp.size();
  try {
    for (const TriElement& t : cs) {
      std::vector<Rational> co = g.triS.coords(t);
      SparseVec v;
      for (int k = 0; k < g.triS.dim(); ++k)
        if (!is_zero(co[k])) v.set(g.tri_index(k), co[k]);
      out.cartan.push_back(std::move(v));
    }
    for (const TriElement& t : cp) {
      std::vector<Rational> co = g.triSp.coords(t);
      SparseVec v;
      for (int k = 0; k < g.triSp.dim(); ++k)
        if (!is_zero(co[k])) v.set(g.trip_index(k), co[k]);
      out.cartan.push_back(std::move(v));
    }
  } catch (const std::runtime_error&) {
    return out;  // outside the triple algebra: leave incomplete
  }
  for (const std::vector<TriElement>* side : {&cs, &cp}) {
    for (const TriElement& t : *side)
      if (!all_components_diagonal(t)) return out;
    for (size_t i = 0; i < side->size(); ++i)
      for (size_t j = i + 1; j < side->size(); ++j)
        if (!tri_is_zero(tri_commutator((*side)[i], (*side)[j]))) return out;
  }
  std::vector<BlockSpace> bs, bp;
  if (!refine_block(cs, g.triS, bs) || !refine_block(cp, g.triSp, bp))
    return out;

  std::map<std::vector<Rational>, int> merged;
  for (const BlockSpace& b : bs) {
    if (b.basis.empty()) continue;
    std::vector<Rational> w = b.weight;
    w.resize(ns + np, Rational(0));
    merged[w] += (int)b.basis.size();
  }
  for (const BlockSpace& b : bp) {
    if (b.basis.empty()) continue;
    std::vector<Rational> w(ns, Rational(0));
    w.insert(w.end(), b.weight.begin(), b.weight.end());
    merged[w] += (int)b.basis.size();
  }
  for (int i = 0; i < 3; ++i)
    for (int p = 0; p < g.S.dim; ++p)
      for (int q = 0; q < g.Sp.dim; ++q) {
        std::vector<Rational> w;
        w.reserve(ns + np);
        for (const TriElement& t : cs) w.push_back(t.d[i][p][p]);
        for (const TriElement& t : cp) w.push_back(t.d[i][q][q]);
        merged[w] += 1;
      }
  long total = 0;
  for (const auto& [w, d] : merged) {
    out.spaces.push_back(MagicRoots::Space{w, d});
    total += d;
  }
  out.complete = total == g.sc.dim;
  return out;
}

CrossReport cross_validate(const MagicAlgebra& g, const TensorModel& tm,
                           const StructureConstants& tensor) {
  CrossReport r;
  r.dim_magic = g.sc.dim;
  r.dim_tensor = tensor.dim;
  Mat km = killing_form(g.sc);
  Mat kt = killing_form(tensor);
  r.killing_rank_magic = matrix_rank(km);
  r.killing_rank_tensor = matrix_rank(kt);
  bool dims_ok = r.dim_magic == r.dim_tensor;
  bool kill_ok = r.killing_rank_magic == r.killing_rank_tensor;
  if (!dims_ok) r.notes.push_back("dimension mismatch");
  if (!kill_ok) r.notes.push_back("Killing rank mismatch");

  MagicRoots mr = magic_roots(g);
  if (mr.complete) {
    r.root_comparison = true;
    std::vector<std::vector<Rational>> rm;
    for (const MagicRoots::Space& s : mr.spaces) {
      bool zero = true;
      for (const Rational& w : s.weight)
        if (!is_zero(w)) {
          zero = false;
          break;
        }
      if (zero) continue;
      for (int d = 0; d < s.dim; ++d) rm.push_back(s.weight);
    }
    RootDatum rd = root_datum(tm, tensor);
    std::vector<std::vector<Rational>> rt = rd.root_vectors();
    r.roots_magic = (long)rm.size();
    r.roots_tensor = (long)rt.size();

    const int ra = (int)mr.cartan.size();
    Mat kcm = mat_zero(ra, ra);
    for (int i = 0; i < ra; ++i)
      for (int j = 0; j < ra; ++j) {
        Rational s = 0;
        for (const auto& [t, c] : mr.cartan[i].terms)
          for (const auto& [u, e] : mr.cartan[j].terms) s += c * km[t][u] * e;
        kcm[i][j] = s;
      }
    const int rb = rd.rank();
    Mat kct = mat_zero(rb, rb);
    for (int i = 0; i < rb; ++i)
      for (int j = 0; j < rb; ++j)
        kct[i][j] = rat(rd.cartan[i].sign * rd.cartan[j].sign) *
                    kt[rd.cartan[i].index][rd.cartan[j].index];

    std::vector<std::vector<Rational>> pm, pt;
    bool ok = rm.size() == rt.size() && pairing_profiles(rm, kcm, pm) &&
              pairing_profiles(rt, kct, pt) && pm == pt;
    r.roots_match = ok;
    if (!ok) r.notes.push_back("root systems differ");
    r.pass = dims_ok && kill_ok && ok;
    return r;
  }

  r.notes.push_back(
      "eigen decomposition incomplete; comparing derived rank and center "
      "instead of roots");
  r.derived_magic = derived_rank(g.sc);
  r.derived_tensor = derived_rank(tensor);
  r.center_magic = (int)center_basis(g.sc).size();
  r.center_tensor = (int)center_basis(tensor).size();
  bool deg_ok = r.derived_magic == r.derived_tensor &&
                r.center_magic == r.center_tensor;
  if (!deg_ok) r.notes.push_back("derived/center mismatch");
  r.pass = dims_ok && kill_ok && deg_ok;
  return r;
}

}  // namespace msq
