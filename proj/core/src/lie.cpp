#include <msq/lie.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <random>
#include <thread>

namespace msq {

SparseVec StructureConstants::bracket(int i, int j) const {
  if (i == j) return {};
  if (i < j) return upper(i, j);
  return -upper(j, i);
}

SparseVec StructureConstants::bracket_vec(const SparseVec& x,
                                          const SparseVec& y) const {
  DenseAccum acc(dim);
  for (const auto& [i, ci] : x.terms)
    for (const auto& [j, cj] : y.terms) bracket_into(acc, ci * cj, i, j);
  return acc.to_sparse();
}

std::vector<SparseVec> StructureConstants::ad_columns(int i) const {
  std::vector<SparseVec> cols(dim);
  for (int m = 0; m < dim; ++m) cols[m] = bracket(i, m);
  return cols;
}

StructureConstants assemble(const TensorModel& m) {
  StructureConstants sc;
  sc.name = family_name(m.fam);
  sc.dim = m.dim;
  sc.labels = m.labels;
  sc.degree.resize(m.dim);
  for (int i = 0; i < m.dim; ++i)
    sc.degree[i] = m.subsets[m.decode(i).subset_pos];
  sc.table.resize((size_t)m.dim * m.dim);
  for (int i = 0; i < m.dim; ++i)
    for (int j = i + 1; j < m.dim; ++j)
      sc.table[(size_t)i * m.dim + j] = model_bracket(m, i, j);
  return sc;
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("MSQ_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? (int)hw : 1;
}

namespace {

// Shared state of a threaded triple scan.
struct ScanState {
  std::atomic<long> violations{0};
  std::atomic<bool> stop{false};
  std::mutex mu;
  std::vector<std::string> witnesses;

  void record(const std::string& w, bool stop_at_first) {
    ++violations;
    {
      std::lock_guard<std::mutex> lock(mu);
      if (witnesses.size() < 32) witnesses.push_back(w);
    }
    if (stop_at_first) stop.store(true, std::memory_order_relaxed);
  }
};

std::string triple_name(const std::vector<std::string>& labels, int i, int j,
                        int k) {
  return "(" + labels[i] + ", " + labels[j] + ", " + labels[k] + ")";
}

}  // namespace

CheckReport jacobi_check(const StructureConstants& sc, int threads,
                         bool stop_at_first) {
  int nthreads = resolve_threads(threads);
  ScanState state;
  std::atomic<long> checked{0};
  auto worker = [&](int tid) {
    DenseAccum acc(sc.dim);
    long local = 0;
    for (int i = tid; i < sc.dim; i += nthreads) {
      if (state.stop.load(std::memory_order_relaxed)) break;
      for (int j = i + 1; j < sc.dim; ++j) {
        const SparseVec& bij = sc.upper(i, j);
        for (int k = j + 1; k < sc.dim; ++k) {
          ++local;
          acc.reset();
          for (const auto& [t, c] : bij.terms) sc.bracket_into(acc, c, t, k);
          for (const auto& [t, c] : sc.upper(j, k).terms)
            sc.bracket_into(acc, c, t, i);
          for (const auto& [t, c] : sc.upper(i, k).terms)
            sc.bracket_into(acc, -c, t, j);
          if (!acc.is_zero())
            state.record(triple_name(sc.labels, i, j, k), stop_at_first);
        }
        if (state.stop.load(std::memory_order_relaxed)) break;
      }
    }
    checked += local;
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
  for (auto& th : pool) th.join();

  CheckReport report;
  report.checked = checked.load();
  if (state.violations.load() > 0) {
    report.pass = false;
    std::sort(state.witnesses.begin(), state.witnesses.end());
    report.witnesses = std::move(state.witnesses);
  }
  return report;
}

CheckReport jacobi_sample(const StructureConstants& sc, long samples,
                          unsigned long long seed) {
  CheckReport report;
  std::mt19937_64 rng(seed);
  auto draw = [&]() { return (int)(rng() % (unsigned)sc.dim); };
  DenseAccum acc(sc.dim);
  for (long s = 0; s < samples; ++s) {
    int i = draw(), j = draw(), k = draw();
    ++report.checked;
    acc.reset();
    for (const auto& [t, c] : sc.bracket(i, j).terms)
      sc.bracket_into(acc, c, t, k);
    for (const auto& [t, c] : sc.bracket(j, k).terms)
      sc.bracket_into(acc, c, t, i);
    for (const auto& [t, c] : sc.bracket(k, i).terms)
      sc.bracket_into(acc, c, t, j);
    if (!acc.is_zero()) report.fail(triple_name(sc.labels, i, j, k));
  }
  return report;
}

CheckReport jacobi_scan(int dim, const std::vector<std::string>& labels,
                        const BracketFn& bracket, int threads,
                        bool stop_at_first) {
  int nthreads = resolve_threads(threads);
  ScanState state;
  std::atomic<long> checked{0};
  auto worker = [&](int tid) {
    DenseAccum inner(dim), acc(dim);
    long local = 0;
    for (int i = tid; i < dim; i += nthreads) {
      if (state.stop.load(std::memory_order_relaxed)) break;
      for (int j = i + 1; j < dim; ++j) {
        for (int k = j + 1; k < dim; ++k) {
          ++local;
          acc.reset();
          auto chain = [&](int a, int b, int c) {
            inner.reset();
            bracket(inner, rat(1), a, b);
            for (const auto& [t, cc] : inner.to_sparse().terms)
              bracket(acc, cc, t, c);
          };
          chain(i, j, k);
          chain(j, k, i);
          chain(k, i, j);
          if (!acc.is_zero())
            state.record(triple_name(labels, i, j, k), stop_at_first);
        }
        if (state.stop.load(std::memory_order_relaxed)) break;
      }
    }
    checked += local;
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
  for (auto& th : pool) th.join();

  CheckReport report;
  report.checked = checked.load();
  if (state.violations.load() > 0) {
    report.pass = false;
    std::sort(state.witnesses.begin(), state.witnesses.end());
    report.witnesses = std::move(state.witnesses);
  }
  return report;
}

CheckReport model_antisymmetry_check(const TensorModel& m) {
  CheckReport report;
  for (int i = 0; i < m.dim; ++i)
    for (int j = i; j < m.dim; ++j) {
      ++report.checked;
      if (!(model_bracket(m, i, j) == -model_bracket(m, j, i)))
        report.fail("bracket not antisymmetric at (" + m.labels[i] + ", " +
                    m.labels[j] + ")");
    }
  return report;
}

CheckReport degree_check(const StructureConstants& sc) {
  CheckReport report;
  for (int i = 0; i < sc.dim; ++i)
    for (int j = i + 1; j < sc.dim; ++j) {
      ++report.checked;
      unsigned want = sc.degree[i] ^ sc.degree[j];
      for (const auto& [t, c] : sc.upper(i, j).terms)
        if (sc.degree[t] != want) {
          report.fail("bracket (" + sc.labels[i] + ", " + sc.labels[j] +
                      ") leaves its degree block");
          break;
        }
    }
  return report;
}

Mat killing_form(const StructureConstants& sc, int threads) {
  int nthreads = resolve_threads(threads);
  Mat k = mat_zero(sc.dim, sc.dim);
  // Same-degree pairs only: for distinct degrees the composed map shifts
  // every block, so its trace is zero.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < sc.dim; ++i)
    for (int j = i; j < sc.dim; ++j)
      if (sc.degree[i] == sc.degree[j]) pairs.emplace_back(i, j);
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t p = next.fetch_add(1);
      if (p >= pairs.size()) return;
      auto [i, j] = pairs[p];
      Rational sum = 0;
      for (int m = 0; m < sc.dim; ++m) {
        // coeff of e_m in [e_i, [e_j, e_m]]
        if (j == m) continue;
        const SparseVec& inner = j < m ? sc.upper(j, m) : sc.upper(m, j);
        int sign = j < m ? 1 : -1;
        for (const auto& [t, c] : inner.terms) {
          if (t == i) continue;
          const SparseVec& outer = i < t ? sc.upper(i, t) : sc.upper(t, i);
          Rational v = outer.get(m);
          if (!is_zero(v)) sum += (i < t ? sign : -sign) * c * v;
        }
      }
      k[i][j] = sum;
      k[j][i] = sum;
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return k;
}

int matrix_rank(const Mat& k) {
  RowReducer red(k.empty() ? 0 : (int)k[0].size());
  for (const Vec& row : k) {
    SparseVec v;
    for (int c = 0; c < (int)row.size(); ++c)
      if (!is_zero(row[c])) v.add(c, row[c]);
    red.insert(v);
  }
  return red.rank();
}

std::vector<SparseVec> center_basis(const StructureConstants& sc) {
  // Candidate space, cut down by one ad map at a time.
  std::vector<SparseVec> cand(sc.dim);
  for (int i = 0; i < sc.dim; ++i) cand[i] = SparseVec::unit(i);
  for (int j = 0; j < sc.dim && !cand.empty(); ++j) {
    std::vector<SparseVec> images(cand.size());
    bool all_zero = true;
    for (size_t m = 0; m < cand.size(); ++m) {
      images[m] = sc.bracket_vec(cand[m], SparseVec::unit(j));
      if (!images[m].empty()) all_zero = false;
    }
    if (all_zero) continue;
    // Solve for combinations of the candidates killed by ad(e_j).
    RatMatrix sys(sc.dim, (int)cand.size());
    for (size_t m = 0; m < cand.size(); ++m)
      for (const auto& [t, c] : images[m].terms) sys.row[t].add((int)m, c);
    std::vector<SparseVec> combos = kernel_basis(sys);
    std::vector<SparseVec> next;
    for (const SparseVec& combo : combos) {
      SparseVec x;
      for (const auto& [m, c] : combo.terms) x.axpy(c, cand[m]);
      if (!x.empty()) next.push_back(std::move(x));
    }
    cand = std::move(next);
  }
  return cand;
}

int derived_rank(const StructureConstants& sc) {
  RowReducer red(sc.dim);
  for (int i = 0; i < sc.dim && red.rank() < sc.dim; ++i)
    for (int j = i + 1; j < sc.dim; ++j) {
      const SparseVec& v = sc.upper(i, j);
      if (!v.empty()) red.insert(v);
    }
  return red.rank();
}

}  // namespace msq
