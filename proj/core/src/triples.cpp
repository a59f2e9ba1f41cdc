#include <msq/triples.hpp>

#include <msq/tensor_model.hpp>

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>
#include <thread>
#include <utility>

namespace msq {

namespace {

struct StripSpec {
  Family fam;
  int slot;
};

StripSpec strip_spec(const std::string& pair) {
  if (pair == "e8/e7") return {Family::e8, 8};
  if (pair == "e7/d6") return {Family::e7, 4};
  if (pair == "e6/a5") return {Family::e6, 4};
  if (pair == "f4/c3") return {Family::f4, 4};
  throw std::invalid_argument("sts_extract: unknown pair " + pair);
}

// Removes the stripped slot's letter from a slice label, e.g. "v1w2v8"
// with slot 8 becomes "v1w2".
std::string strip_letter(std::string label, int slot) {
  std::string needle = "v" + std::to_string(slot);
  auto pos = label.find(needle);
  if (pos == std::string::npos)
    throw std::logic_error("sts_extract: slice label without " + needle +
                           ": " + label);
  label.erase(pos, needle.size());
  return label;
}

std::string idx_witness(const char* tag, std::initializer_list<long> ids) {
  std::string s(tag);
  s += '(';
  bool first = true;
  for (long i : ids) {
    if (!first) s += ',';
    s += std::to_string(i);
    first = false;
  }
  s += ')';
  return s;
}

// Shared state of one threaded identity sweep.
struct AxState {
  std::atomic<long> checked{0};
  std::atomic<bool> failed{false};
  std::mutex mu;
  std::vector<std::string> wit;

  void record(std::string w) {
    failed.store(true, std::memory_order_relaxed);
    std::lock_guard<std::mutex> lock(mu);
    if (wit.size() < 32) wit.push_back(std::move(w));
  }

  // Deterministic order regardless of thread interleaving.
  void merge(TripleReport& rep, long& counter) {
    counter += checked.load();
    if (failed.load()) {
      rep.pass = false;
      std::sort(wit.begin(), wit.end());
      for (auto& w : wit)
        if (rep.witnesses.size() < 32) rep.witnesses.push_back(std::move(w));
    }
  }
};

void run_pool(int nthreads, const std::function<void(int)>& worker) {
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
  for (auto& th : pool) th.join();
}

// LHS minus RHS of the five-argument derivation identity; true when zero.
bool sts_c_holds(const SymplecticTripleSystem& t, DenseAccum& acc, int x,
                 int y, int u, int v, int w) {
  acc.reset();
  for (const auto& [m, c] : t.triple(u, v, w).terms)
    acc.axpy(c, t.triple(x, y, m));
  for (const auto& [m, c] : t.triple(x, y, u).terms)
    acc.axpy(-c, t.triple(m, v, w));
  for (const auto& [m, c] : t.triple(x, y, v).terms)
    acc.axpy(-c, t.triple(u, m, w));
  for (const auto& [m, c] : t.triple(x, y, w).terms)
    acc.axpy(-c, t.triple(u, v, m));
  return acc.is_zero();
}

// Marks the pairs (x, y) whose operator [x y .] is nonzero; identities
// built entirely from that operator hold vacuously elsewhere.
std::vector<char> nonzero_pairs(const SymplecticTripleSystem& t) {
  const int n = t.dim;
  std::vector<char> nz((size_t)n * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (!t.triple(x, y, z).empty()) {
          nz[(size_t)x * n + y] = 1;
          break;
        }
  return nz;
}

}  // namespace

SymplecticTripleSystem sts_extract(const std::string& pair) {
  StripSpec spec = strip_spec(pair);
  TensorModel m = build_model(spec.fam);
  StructureConstants sc = assemble(m);
  const int h = m.sp_index(spec.slot, 1);
  const int f = m.sp_index(spec.slot, 2);

  // The v-copy of T is the +1 eigenspace of ad(h) at the stripped slot.
  std::vector<int> to_v;
  for (int b = 0; b < sc.dim; ++b) {
    SparseVec hb = sc.bracket(h, b);
    if (hb.empty()) continue;
    if (hb.nnz() != 1 || hb.terms[0].first != b)
      throw std::logic_error("sts_extract: ad(h) is not diagonal on basis " +
                             sc.labels[b]);
    if (hb.terms[0].second == rat(1)) to_v.push_back(b);
  }
  const int n = (int)to_v.size();
  if (n == 0) throw DegenerateSplit("sts_extract: empty slice for " + pair);

  // ad(f) sends each v-slice vector to its partner in the w-copy.
  std::vector<int> to_w(n);
  std::vector<int> t_of(sc.dim, -1);
  for (int k = 0; k < n; ++k) {
    SparseVec fb = sc.bracket(f, to_v[k]);
    if (fb.nnz() != 1 || fb.terms[0].second != rat(1))
      throw std::logic_error("sts_extract: ad(f) image of " +
                             sc.labels[to_v[k]] + " is not a single partner");
    to_w[k] = fb.terms[0].first;
    t_of[to_v[k]] = k;
  }

  auto project_v = [&](const SparseVec& mv) {
    SparseVec out;
    out.terms.reserve(mv.nnz());
    for (const auto& [idx, c] : mv.terms) {
      if (t_of[idx] < 0)
        throw std::logic_error("sts_extract: bracket leaks outside the slice");
      out.terms.emplace_back(t_of[idx], c);
    }
    return out;
  };

  SymplecticTripleSystem t;
  t.name = "sts:" + pair;
  t.dim = n;
  t.labels.reserve(n);
  for (int k = 0; k < n; ++k)
    t.labels.push_back(strip_letter(m.labels[to_v[k]], spec.slot));
  t.form = mat_zero(n, n);
  t.product.assign((size_t)n * n * n, {});

  // [x v, y w] splits as d_{x,y} plus (x|y) times the slot generator h;
  // the product is the action of that operator back on the v-copy.
  SparseVec zv;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      SparseVec D = sc.bracket(to_v[x], to_w[y]);
      Rational fxy = -D.get(h);
      t.form[x][y] = fxy;
      if (D.empty()) continue;
      for (int z = 0; z < n; ++z) {
        zv.terms.assign(1, {to_v[z], rat(1)});
        SparseVec res = project_v(sc.bracket_vec(D, zv));
        res.add(z, fxy);
        if (!res.empty()) t.triple(x, y, z) = std::move(res);
      }
    }

  bool all_zero = true;
  for (int x = 0; x < n && all_zero; ++x)
    for (int y = 0; y < n; ++y)
      if (!is_zero(t.form[x][y])) {
        all_zero = false;
        break;
      }
  if (all_zero)
    throw DegenerateSplit("sts_extract: form is identically zero for " + pair);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (t.form[x][y] != -t.form[y][x])
        throw std::logic_error("sts_extract: form is not alternating");
  return t;
}

TripleReport sts_axioms(const SymplecticTripleSystem& t, AxiomMode mode,
                        int threads, unsigned long long seed, long samples) {
  const int n = t.dim;
  TripleReport rep;
  rep.seed = seed;
  const bool hybrid =
      mode == AxiomMode::Hybrid || (mode == AxiomMode::Auto && n > 32);
  const int nthreads = resolve_threads(threads);
  const std::vector<char> nz = nonzero_pairs(t);

  // (a) symmetry in the first two slots.
  {
    AxState st;
    auto worker = [&](int tid) {
      long local = 0;
      for (int x = tid; x < n; x += nthreads)
        for (int y = x + 1; y < n; ++y)
          for (int z = 0; z < n; ++z) {
            ++local;
            if (!(t.triple(x, y, z) == t.triple(y, x, z)))
              st.record(idx_witness("STSa", {x, y, z}));
          }
      st.checked += local;
    };
    run_pool(nthreads, worker);
    st.merge(rep, rep.checked_a);
  }

  // (b) the alternating defect of slots two and three.
  {
    AxState st;
    auto worker = [&](int tid) {
      DenseAccum acc(n);
      long local = 0;
      for (int x = tid; x < n; x += nthreads)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z) {
            ++local;
            acc.reset();
            acc.axpy(rat(1), t.triple(x, y, z));
            acc.axpy(rat(-1), t.triple(x, z, y));
            acc.add(y, -t.form[x][z]);
            acc.add(z, t.form[x][y]);
            acc.add(x, rat(-2) * t.form[y][z]);
            if (!acc.is_zero()) st.record(idx_witness("STSb", {x, y, z}));
          }
      st.checked += local;
    };
    run_pool(nthreads, worker);
    st.merge(rep, rep.checked_b);
  }

  // (d) the operators [x y .] preserve the form.
  {
    AxState st;
    auto worker = [&](int tid) {
      long local = 0;
      for (int x = tid; x < n; x += nthreads)
        for (int y = 0; y < n; ++y) {
          if (!nz[(size_t)x * n + y]) {
            local += (long)n * n;
            continue;
          }
          for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
              ++local;
              Rational s(0);
              for (const auto& [m, c] : t.triple(x, y, u).terms)
                s += c * t.form[m][v];
              for (const auto& [m, c] : t.triple(x, y, v).terms)
                s += c * t.form[u][m];
              if (!is_zero(s)) st.record(idx_witness("STSd", {x, y, u, v}));
            }
        }
      st.checked += local;
    };
    run_pool(nthreads, worker);
    st.merge(rep, rep.checked_d);
  }

  // (c) each operator [x y .] is a derivation of the product. Covering
  // x <= y suffices once (a) holds at table level; the exhaustive sweep is
  // the expensive one, so above dim 32 it runs on seeded tuples instead.
  if (!hybrid) {
    AxState st;
    auto worker = [&](int tid) {
      DenseAccum acc(n);
      long local = 0;
      for (int x = tid; x < n; x += nthreads)
        for (int y = x; y < n; ++y) {
          if (!nz[(size_t)x * n + y]) {
            local += (long)n * n * n;
            continue;
          }
          for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
              for (int w = 0; w < n; ++w) {
                ++local;
                if (!sts_c_holds(t, acc, x, y, u, v, w))
                  st.record(idx_witness("STSc", {x, y, u, v, w}));
              }
        }
      st.checked += local;
    };
    run_pool(nthreads, worker);
    st.merge(rep, rep.checked_c);
  } else {
    // Sequential draw so the tuple stream depends only on the seed.
    std::mt19937_64 rng(seed);
    DenseAccum acc(n);
    auto draw = [&]() { return (int)(rng() % (unsigned)n); };
    for (long s = 0; s < samples; ++s) {
      int x = draw(), y = draw(), u = draw(), v = draw(), w = draw();
      ++rep.checked_c;
      if (!sts_c_holds(t, acc, x, y, u, v, w))
        rep.fail(idx_witness("STSc", {x, y, u, v, w}));
    }
    rep.sampled = true;
    rep.samples = samples;
  }

  return rep;
}

TripleReport fts_axioms(const FreudenthalTripleSystem& t, AxiomMode mode,
                        int threads, unsigned long long seed, long samples) {
  const int n = t.dim;
  TripleReport rep;
  rep.seed = seed;
  const bool hybrid =
      mode == AxiomMode::Hybrid || (mode == AxiomMode::Auto && n > 32);
  const int nthreads = resolve_threads(threads);

  // (a) full symmetry, via the two adjacent transpositions.
  {
    AxState st;
    auto worker = [&](int tid) {
      long local = 0;
      for (int x = tid; x < n; x += nthreads)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z) {
            if (x < y) {
              ++local;
              if (!(t.triple(x, y, z) == t.triple(y, x, z)))
                st.record(idx_witness("FTa", {x, y, z}));
            }
            if (y < z) {
              ++local;
              if (!(t.triple(x, y, z) == t.triple(x, z, y)))
                st.record(idx_witness("FTa", {x, y, z}));
            }
          }
      st.checked += local;
    };
    run_pool(nthreads, worker);
    st.merge(rep, rep.checked_a);
  }

  // (b) pairing the product with the form is symmetric. Once (a) holds the
  // last three arguments commute at table level, so the swap of the first
  // two is the identity that needs scanning; it is the sampled one in
  // hybrid runs.
  auto fb_holds = [&](int x, int y, int z, int w) {
    Rational s(0);
    for (const auto& [m, c] : t.triple(y, z, w).terms)
      s += c * t.form[x][m];
    for (const auto& [m, c] : t.triple(x, z, w).terms)
      s -= c * t.form[y][m];
    return is_zero(s);
  };
  if (!hybrid) {
    AxState st;
    auto worker = [&](int tid) {
      long local = 0;
      for (int x = tid; x < n; x += nthreads)
        for (int y = x + 1; y < n; ++y)
          for (int z = 0; z < n; ++z)
            for (int w = 0; w < n; ++w) {
              ++local;
              if (!fb_holds(x, y, z, w))
                st.record(idx_witness("FTb", {x, y, z, w}));
            }
      st.checked += local;
    };
    run_pool(nthreads, worker);
    st.merge(rep, rep.checked_b);
  } else {
    std::mt19937_64 rng(seed);
    auto draw = [&]() { return (int)(rng() % (unsigned)n); };
    for (long s = 0; s < samples; ++s) {
      int x = draw(), y = draw(), z = draw(), w = draw();
      ++rep.checked_b;
      if (!fb_holds(x, y, z, w)) rep.fail(idx_witness("FTb", {x, y, z, w}));
    }
    rep.sampled = true;
    rep.samples = samples;
  }

  // (c) the three-argument closing identity.
  {
    AxState st;
    auto worker = [&](int tid) {
      DenseAccum acc(n);
      long local = 0;
      for (int x = tid; x < n; x += nthreads)
        for (int y = 0; y < n; ++y) {
          const SparseVec& a = t.triple(x, y, y);
          const SparseVec& b = t.triple(y, x, x);
          for (int z = 0; z < n; ++z) {
            ++local;
            acc.reset();
            for (const auto& [m, c] : a.terms) acc.axpy(c, t.triple(m, x, z));
            for (const auto& [m, c] : b.terms) acc.axpy(c, t.triple(m, y, z));
            Rational az(0), bz(0);
            for (const auto& [m, c] : a.terms) az += c * t.form[m][z];
            for (const auto& [m, c] : b.terms) bz += c * t.form[m][z];
            acc.add(x, az);
            acc.add(y, bz);
            acc.axpy(t.form[x][z], a);
            acc.axpy(t.form[y][z], b);
            if (!acc.is_zero()) st.record(idx_witness("FTc", {x, y, z}));
          }
        }
      st.checked += local;
    };
    run_pool(nthreads, worker);
    st.merge(rep, rep.checked_c);
  }

  return rep;
}

FreudenthalTripleSystem fts_from_sts(const SymplecticTripleSystem& t) {
  const int n = t.dim;
  FreudenthalTripleSystem f;
  f.name = t.name.rfind("sts:", 0) == 0 ? "fts:" + t.name.substr(4)
                                        : "fts:" + t.name;
  f.dim = n;
  f.labels = t.labels;
  f.form = t.form;
  f.product.assign((size_t)n * n * n, {});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        SparseVec o = t.triple(x, y, z);
        o.add(y, -t.form[x][z]);
        o.add(x, -t.form[y][z]);
        if (!o.empty()) f.triple(x, y, z) = std::move(o);
      }
  return f;
}

SymplecticTripleSystem sts_from_fts(const FreudenthalTripleSystem& t) {
  const int n = t.dim;
  SymplecticTripleSystem s;
  s.name = t.name.rfind("fts:", 0) == 0 ? "sts:" + t.name.substr(4)
                                        : "sts:" + t.name;
  s.dim = n;
  s.labels = t.labels;
  s.form = t.form;
  s.product.assign((size_t)n * n * n, {});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        SparseVec o = t.triple(x, y, z);
        o.add(y, t.form[x][z]);
        o.add(x, t.form[y][z]);
        if (!o.empty()) s.triple(x, y, z) = std::move(o);
      }
  return s;
}

TripleReport fts_derivation_check(const FreudenthalTripleSystem& t,
                                  long samples, unsigned long long seed) {
  const int n = t.dim;
  TripleReport rep;
  rep.seed = seed;
  rep.sampled = true;
  rep.samples = samples;
  std::mt19937_64 rng(seed);
  auto draw = [&]() { return (int)(rng() % (unsigned)n); };
  auto dxx = [&](int x, int u) {
    SparseVec r = t.triple(x, x, u);
    r.add(x, rat(2) * t.form[x][u]);
    return r;
  };
  DenseAccum acc(n);
  for (long s = 0; s < samples; ++s) {
    int x = draw(), y = draw(), z = draw();
    ++rep.checked_c;
    acc.reset();
    for (const auto& [m, c] : t.triple(y, y, z).terms) acc.axpy(c, dxx(x, m));
    for (const auto& [m, c] : dxx(x, y).terms)
      acc.axpy(rat(-2) * c, t.triple(m, y, z));
    for (const auto& [m, c] : dxx(x, z).terms)
      acc.axpy(-c, t.triple(y, y, m));
    if (!acc.is_zero()) rep.fail(idx_witness("deri", {x, y, z}));
  }
  return rep;
}

TripleReport inder_pair_check(const SymplecticTripleSystem& t, long samples,
                              unsigned long long seed) {
  const int n = t.dim;
  TripleReport rep;
  rep.seed = seed;
  rep.sampled = true;
  rep.samples = samples;
  std::mt19937_64 rng(seed);
  auto draw = [&]() { return (int)(rng() % (unsigned)n); };
  DenseAccum acc(n);
  for (long s = 0; s < samples; ++s) {
    int x = draw(), y = draw();
    ++rep.checked_c;
    // Symmetric products x y y and y x x of the converted system.
    SparseVec a = t.triple(x, y, y);
    a.add(y, -t.form[x][y]);
    SparseVec b = t.triple(y, x, x);
    b.add(x, t.form[x][y]);
    bool ok = true;
    for (int z = 0; z < n && ok; ++z) {
      acc.reset();
      for (const auto& [m, c] : a.terms) acc.axpy(c, t.triple(x, m, z));
      for (const auto& [m, c] : b.terms) acc.axpy(c, t.triple(y, m, z));
      ok = acc.is_zero();
    }
    if (!ok) rep.fail(idx_witness("dpair", {x, y}));
  }
  return rep;
}

namespace {

// Row-major flattening of the operator [x y .]; entry (m, z) is the
// e_m-coefficient of [x y z].
SparseVec flat_operator(const SymplecticTripleSystem& t, int x, int y) {
  const int n = t.dim;
  std::vector<SparseVec> rows(n);
  for (int z = 0; z < n; ++z)
    for (const auto& [m, c] : t.triple(x, y, z).terms) rows[m].set(z, c);
  SparseVec flat;
  for (int m = 0; m < n; ++m)
    for (const auto& [z, c] : rows[m].terms)
      flat.terms.emplace_back(m * n + z, c);
  return flat;
}

std::vector<SparseVec> flat_to_rows(const SparseVec& flat, int n) {
  std::vector<SparseVec> rows(n);
  for (const auto& [idx, c] : flat.terms)
    rows[idx / n].terms.emplace_back(idx % n, c);
  return rows;
}

std::vector<SparseVec> flat_to_cols(const SparseVec& flat, int n) {
  std::vector<SparseVec> cols(n);
  for (const auto& [idx, c] : flat.terms)
    cols[idx % n].terms.emplace_back(idx / n, c);
  return cols;
}

}  // namespace

std::vector<SparseVec> inder_basis(const SymplecticTripleSystem& t) {
  const int n = t.dim;
  RowReducer red(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) {
      SparseVec flat = flat_operator(t, x, y);
      if (!flat.empty()) red.insert(flat);
    }
  return red.rref();
}

StructureConstants reconstruct_lie(const SymplecticTripleSystem& t,
                                   int threads) {
  TripleReport axioms = sts_axioms(t, AxiomMode::Auto, threads);
  if (!axioms.pass)
    throw AxiomsFail("reconstruct_lie(" + t.name +
                     "): " + axioms.witnesses.front());

  const int n = t.dim;
  std::vector<SparseVec> basis = inder_basis(t);
  const int r = (int)basis.size();
  std::vector<int> piv(r);
  for (int j = 0; j < r; ++j) piv[j] = basis[j].terms.front().first;

  // Coordinates in the echelon basis are pivot reads; the residual check
  // guards against an operator escaping the span.
  DenseAccum resid(n * n);
  auto coords = [&](const SparseVec& flat) {
    SparseVec co;
    for (int j = 0; j < r; ++j) {
      Rational c = flat.get(piv[j]);
      if (!is_zero(c)) co.terms.emplace_back(j, c);
    }
    resid.reset();
    resid.axpy(rat(1), flat);
    for (const auto& [j, c] : co.terms) resid.axpy(-c, basis[j]);
    if (!resid.is_zero())
      throw std::logic_error("reconstruct_lie: operator outside the span");
    return co;
  };

  std::vector<SparseVec> dco((size_t)n * n);
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y)
      dco[(size_t)x * n + y] = coords(flat_operator(t, x, y));

  std::vector<std::vector<SparseVec>> brows(r), bcols(r);
  for (int j = 0; j < r; ++j) {
    brows[j] = flat_to_rows(basis[j], n);
    bcols[j] = flat_to_cols(basis[j], n);
  }

  StructureConstants g;
  g.name = "rebuilt:" + t.name;
  g.dim = r + 3 + 2 * n;
  const int E = r, H = r + 1, F = r + 2, V0 = r + 3, W0 = r + 3 + n;
  g.labels.reserve(g.dim);
  for (int j = 0; j < r; ++j) g.labels.push_back("d" + std::to_string(j));
  g.labels.push_back("e");
  g.labels.push_back("h");
  g.labels.push_back("f");
  for (int k = 0; k < n; ++k) g.labels.push_back(t.labels[k] + "|v");
  for (int k = 0; k < n; ++k) g.labels.push_back(t.labels[k] + "|w");
  g.degree.assign(g.dim, 0);
  for (int k = 0; k < 2 * n; ++k) g.degree[V0 + k] = 1;
  g.table.assign((size_t)g.dim * g.dim, {});
  auto put = [&](int i, int j, SparseVec v) {
    if (!v.empty()) g.table[(size_t)i * g.dim + j] = std::move(v);
  };

  // Operator commutators stay inside the span.
  DenseAccum acc(n);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      SparseVec flat;
      for (int a = 0; a < n; ++a) {
        acc.reset();
        for (const auto& [m, c] : brows[i][a].terms) acc.axpy(c, brows[j][m]);
        for (const auto& [m, c] : brows[j][a].terms) acc.axpy(-c, brows[i][m]);
        for (const auto& [z, c] : acc.to_sparse().terms)
          flat.terms.emplace_back(a * n + z, c);
      }
      put(i, j, coords(flat));
    }

  // The operator part acts on both copies of T.
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < n; ++k) {
      SparseVec v, w;
      for (const auto& [m, c] : bcols[j][k].terms) {
        v.terms.emplace_back(V0 + m, c);
        w.terms.emplace_back(W0 + m, c);
      }
      put(j, V0 + k, std::move(v));
      put(j, W0 + k, std::move(w));
    }

  // The sl2 part and its action on the two copies.
  {
    SparseVec v;
    v.set(E, rat(-2));
    put(E, H, std::move(v));
  }
  {
    SparseVec v;
    v.set(H, rat(1));
    put(E, F, std::move(v));
  }
  {
    SparseVec v;
    v.set(F, rat(-2));
    put(H, F, std::move(v));
  }
  for (int k = 0; k < n; ++k) {
    SparseVec v;
    v.set(V0 + k, rat(1));
    put(E, W0 + k, std::move(v));
    v = {};
    v.set(V0 + k, rat(1));
    put(H, V0 + k, std::move(v));
    v = {};
    v.set(W0 + k, rat(-1));
    put(H, W0 + k, std::move(v));
    v = {};
    v.set(W0 + k, rat(1));
    put(F, V0 + k, std::move(v));
  }

  // Products of the odd part: same copy hits the sl2 corner, mixed copies
  // recover the operator plus the form times h.
  for (int k = 0; k < n; ++k) {
    for (int l = k + 1; l < n; ++l) {
      if (!is_zero(t.form[k][l])) {
        SparseVec v;
        v.set(E, rat(2) * t.form[k][l]);
        put(V0 + k, V0 + l, std::move(v));
        v = {};
        v.set(F, rat(-2) * t.form[k][l]);
        put(W0 + k, W0 + l, std::move(v));
      }
    }
    for (int l = 0; l < n; ++l) {
      SparseVec v = k <= l ? dco[(size_t)k * n + l] : dco[(size_t)l * n + k];
      v.add(H, -t.form[k][l]);
      put(V0 + k, W0 + l, std::move(v));
    }
  }

  return g;
}

std::array<long, 5> five_grading(const StructureConstants& sc, int h_index) {
  std::array<long, 5> dims{};
  for (int j = 0; j < sc.dim; ++j) {
    SparseVec br = sc.bracket(h_index, j);
    long level = 0;
    if (!br.empty()) {
      if (br.nnz() != 1 || br.terms[0].first != j)
        throw std::runtime_error("five_grading: basis vector " +
                                 sc.labels[j] + " is not an eigenvector");
      const Rational& lam = br.terms[0].second;
      if (lam.get_den() != 1 || lam.get_num() < -2 || lam.get_num() > 2)
        throw std::runtime_error("five_grading: eigenvalue out of range at " +
                                 sc.labels[j]);
      level = lam.get_num().get_si();
    }
    ++dims[level + 2];
  }
  return dims;
}

}  // namespace msq
