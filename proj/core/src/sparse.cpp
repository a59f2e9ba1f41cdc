#include "msq/sparse.hpp"
#include <algorithm>
#include <map>

namespace msq {

SparseVec SparseVec::unit(int i, const Rational& c) {
    SparseVec v;
    if (!is_zero(c)) v.terms.emplace_back(i, c);
    return v;
}

Rational SparseVec::get(int i) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), i,
        [](const auto& t, int k) { return t.first < k; });
    if (it != terms.end() && it->first == i) return it->second;
    return Rational(0);
}

void SparseVec::set(int i, const Rational& c) {
    auto it = std::lower_bound(terms.begin(), terms.end(), i,
        [](const auto& t, int k) { return t.first < k; });
    if (it != terms.end() && it->first == i) {
        if (is_zero(c)) terms.erase(it);
        else it->second = c;
    } else if (!is_zero(c)) {
        terms.insert(it, {i, c});
    }
}

void SparseVec::add(int i, const Rational& c) {
    if (is_zero(c)) return;
    auto it = std::lower_bound(terms.begin(), terms.end(), i,
        [](const auto& t, int k) { return t.first < k; });
    if (it != terms.end() && it->first == i) {
        it->second += c;
        if (is_zero(it->second)) terms.erase(it);
    } else {
        terms.insert(it, {i, c});
    }
}

SparseVec& SparseVec::axpy(const Rational& c, const SparseVec& o) {
    if (is_zero(c) || o.terms.empty()) return *this;
    std::vector<std::pair<int, Rational>> out;
    out.reserve(terms.size() + o.terms.size());
    auto a = terms.begin(); auto b = o.terms.begin();
    while (a != terms.end() || b != o.terms.end()) {
        if (b == o.terms.end() || (a != terms.end() && a->first < b->first)) {
            out.push_back(*a); ++a;
        } else if (a == terms.end() || b->first < a->first) {
            Rational v = c * b->second;
            if (!is_zero(v)) out.emplace_back(b->first, std::move(v));
            ++b;
        } else {
            Rational v = a->second + c * b->second;
            if (!is_zero(v)) out.emplace_back(a->first, std::move(v));
            ++a; ++b;
        }
    }
    terms = std::move(out);
    return *this;
}

SparseVec& SparseVec::operator+=(const SparseVec& o) { return axpy(Rational(1), o); }

SparseVec& SparseVec::operator*=(const Rational& c) {
    if (is_zero(c)) { terms.clear(); return *this; }
    for (auto& t : terms) t.second *= c;
    return *this;
}

SparseVec SparseVec::operator-() const {
    SparseVec v = *this;
    for (auto& t : v.terms) t.second = -t.second;
    return v;
}

void SparseVec::check_invariants() const {
    for (size_t k = 0; k < terms.size(); ++k) {
        if (is_zero(terms[k].second)) throw std::logic_error("stored zero term");
        if (k > 0 && terms[k - 1].first >= terms[k].first)
            throw std::logic_error("indices not strictly increasing");
    }
}

SparseVec operator+(SparseVec a, const SparseVec& b) { a += b; return a; }
SparseVec operator-(SparseVec a, const SparseVec& b) { a.axpy(Rational(-1), b); return a; }
SparseVec operator*(const Rational& c, SparseVec v) { v *= c; return v; }

Rational dot(const SparseVec& a, const SparseVec& b) {
    Rational s(0);
    auto i = a.terms.begin(); auto j = b.terms.begin();
    while (i != a.terms.end() && j != b.terms.end()) {
        if (i->first < j->first) ++i;
        else if (j->first < i->first) ++j;
        else { s += i->second * j->second; ++i; ++j; }
    }
    return s;
}

void DenseAccum::add(int i, const Rational& c) {
    if (stamp_[i] != cur_) {
        stamp_[i] = cur_;
        val_[i] = c;
        touched_.push_back(i);
    } else {
        val_[i] += c;
    }
}

void DenseAccum::axpy(const Rational& c, const SparseVec& v) {
    for (const auto& [i, x] : v.terms) {
        if (stamp_[i] != cur_) {
            stamp_[i] = cur_;
            val_[i] = c * x;
            touched_.push_back(i);
        } else {
            val_[i] += c * x;
        }
    }
}

bool DenseAccum::is_zero() const {
    for (int i : touched_)
        if (sgn(val_[i]) != 0) return false;
    return true;
}

SparseVec DenseAccum::to_sparse() const {
    SparseVec v;
    std::vector<int> idx(touched_);
    std::sort(idx.begin(), idx.end());
    for (int i : idx)
        if (sgn(val_[i]) != 0) v.terms.emplace_back(i, val_[i]);
    return v;
}

namespace {

using IntTerms = std::vector<std::pair<int, mpz_class>>;

// Divide by the content and make the leading entry positive.
void make_primitive(IntTerms& t) {
    if (t.empty()) return;
    mpz_class g = 0;
    for (auto& [i, v] : t) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (sgn(t.front().second) < 0) g = -g;
    if (g != 1)
        for (auto& [i, v] : t) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// r := piv_at_col * r - r_at_col * piv; cancels the pivot column exactly.
void cross_eliminate(IntTerms& r, const IntTerms& piv,
                     const mpz_class& r_at_col, const mpz_class& piv_at_col) {
    IntTerms out;
    out.reserve(r.size() + piv.size());
    auto a = r.begin(); auto b = piv.begin();
    while (a != r.end() || b != piv.end()) {
        if (b == piv.end() || (a != r.end() && a->first < b->first)) {
            out.emplace_back(a->first, piv_at_col * a->second); ++a;
        } else if (a == r.end() || b->first < a->first) {
            out.emplace_back(b->first, -r_at_col * b->second); ++b;
        } else {
            mpz_class v = piv_at_col * a->second - r_at_col * b->second;
            if (sgn(v) != 0) out.emplace_back(a->first, std::move(v));
            ++a; ++b;
        }
    }
    r = std::move(out);
    make_primitive(r);
}

mpz_class entry_at(const IntTerms& t, int col) {
    auto it = std::lower_bound(t.begin(), t.end(), col,
        [](const auto& p, int k) { return p.first < k; });
    if (it != t.end() && it->first == col) return it->second;
    return 0;
}

} // namespace

std::optional<RowReducer::IntRow> RowReducer::reduce(const SparseVec& v) const {
    IntRow r;
    if (v.terms.empty()) return r;
    mpz_class lcm = 1;
    for (const auto& [i, c] : v.terms)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    for (const auto& [i, c] : v.terms)
        r.terms.emplace_back(i, mpz_class(c.get_num() * (lcm / c.get_den())));
    make_primitive(r.terms);
    for (size_t k = 0; k < rows_.size() && !r.terms.empty(); ++k) {
        int p = pivot_cols_[k];
        if (r.terms.front().first > p) continue;
        mpz_class at = entry_at(r.terms, p);
        if (sgn(at) == 0) continue;
        cross_eliminate(r.terms, rows_[k].terms, at, rows_[k].terms.front().second);
    }
    return r;
}

bool RowReducer::insert(const SparseVec& v) {
    auto r = reduce(v);
    if (!r || r->terms.empty()) return false;
    int pivot = r->terms.front().first;
    auto pos = std::lower_bound(pivot_cols_.begin(), pivot_cols_.end(), pivot);
    size_t idx = (size_t)(pos - pivot_cols_.begin());
    pivot_cols_.insert(pos, pivot);
    rows_.insert(rows_.begin() + idx, std::move(*r));
    return true;
}

bool RowReducer::contains(const SparseVec& v) const {
    auto r = reduce(v);
    return r && r->terms.empty();
}

std::vector<SparseVec> RowReducer::rref() const {
    std::vector<IntRow> work = rows_;
    // Back-eliminate: clear each row at the pivots of all later rows.
    for (size_t i = 0; i < work.size(); ++i) {
        for (size_t j = i + 1; j < work.size(); ++j) {
            mpz_class at = entry_at(work[i].terms, pivot_cols_[j]);
            if (sgn(at) != 0)
                cross_eliminate(work[i].terms, work[j].terms, at,
                                work[j].terms.front().second);
        }
    }
    std::vector<SparseVec> out;
    out.reserve(work.size());
    for (const auto& r : work) {
        SparseVec v;
        Rational lead(r.terms.front().second);
        for (const auto& [i, x] : r.terms) {
            Rational q = Rational(x) / lead;
            q.canonicalize();
            v.terms.emplace_back(i, std::move(q));
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<SparseVec> rref(const RatMatrix& m) {
    RowReducer rr(m.cols);
    for (const auto& r : m.row) rr.insert(r);
    return rr.rref();
}

int rank(const RatMatrix& m) {
    RowReducer rr(m.cols);
    for (const auto& r : m.row) rr.insert(r);
    return rr.rank();
}

std::vector<SparseVec> kernel_basis(const RatMatrix& m) {
    if (m.cols == 0) return {};
    RowReducer rr(m.cols);
    for (const auto& r : m.row) rr.insert(r);
    std::vector<SparseVec> R = rr.rref();
    std::vector<int> pivots = rr.pivots(); // sorted ascending, parallel to R
    std::vector<bool> is_pivot(m.cols, false);
    for (int p : pivots) is_pivot[p] = true;

    RowReducer canon(m.cols);
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        SparseVec v;
        v.set(f, Rational(1));
        for (size_t k = 0; k < R.size(); ++k) {
            Rational c = R[k].get(f);
            if (!is_zero(c)) v.set(pivots[k], -c);
        }
        canon.insert(v);
    }
    return canon.rref();
}

std::vector<EigenGroup> simultaneous_eigensplit(
    const std::vector<std::vector<SparseVec>>& map_columns, int n) {
    for (const auto& m : map_columns)
        if ((int)m.size() != n)
            throw std::invalid_argument("map column count mismatch");
    struct VecLess {
        bool operator()(const std::vector<Rational>& a,
                        const std::vector<Rational>& b) const {
            for (size_t k = 0; k < a.size(); ++k) {
                int c = cmp(a[k], b[k]);
                if (c != 0) return c < 0;
            }
            return false;
        }
    };
    std::vector<EigenGroup> groups;
    std::map<std::vector<Rational>, size_t, VecLess> index;
    for (int j = 0; j < n; ++j) {
        std::vector<Rational> key;
        key.reserve(map_columns.size());
        for (const auto& m : map_columns) {
            const SparseVec& col = m[j];
            if (col.terms.empty()) {
                key.emplace_back(0);
            } else if (col.terms.size() == 1 && col.terms[0].first == j) {
                key.push_back(col.terms[0].second);
            } else {
                throw NonDiagonalError("map does not act diagonally on basis vector "
                                       + std::to_string(j));
            }
        }
        auto it = index.find(key);
        if (it == index.end()) {
            index.emplace(key, groups.size());
            groups.push_back({key, {j}});
        } else {
            groups[it->second].members.push_back(j);
        }
    }
    return groups;
}

} // namespace msq
