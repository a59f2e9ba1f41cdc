#include <msq/dense.hpp>

#include <cassert>
#include <stdexcept>
#include <utility>

namespace msq {

Vec vec_zero(int n) { return Vec(n, Rational(0)); }

Vec vec_add(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec vec_scale(const Rational& c, const Vec& a) {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

bool vec_is_zero(const Vec& a) {
  for (const auto& x : a)
    if (!is_zero(x)) return false;
  return true;
}

Mat mat_zero(int rows, int cols) { return Mat(rows, vec_zero(cols)); }

Mat mat_identity(int n) {
  Mat out = mat_zero(n, n);
  for (int i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

Mat mat_add(const Mat& a, const Mat& b) {
  assert(a.size() == b.size());
  Mat out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = vec_add(a[i], b[i]);
  return out;
}

Mat mat_sub(const Mat& a, const Mat& b) {
  assert(a.size() == b.size());
  Mat out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = vec_sub(a[i], b[i]);
  return out;
}

Mat mat_scale(const Rational& c, const Mat& a) {
  Mat out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = vec_scale(c, a[i]);
  return out;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  int rows = (int)a.size();
  int inner = rows ? (int)a[0].size() : 0;
  assert(inner == (int)b.size());
  int cols = inner ? (int)b[0].size() : 0;
  Mat out = mat_zero(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < inner; ++k) {
      if (is_zero(a[i][k])) continue;
      for (int j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

Mat mat_transpose(const Mat& a) {
  int rows = (int)a.size();
  int cols = rows ? (int)a[0].size() : 0;
  Mat out = mat_zero(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out[j][i] = a[i][j];
  return out;
}

Mat mat_commutator(const Mat& a, const Mat& b) {
  return mat_sub(mat_mul(a, b), mat_mul(b, a));
}

Vec mat_apply(const Mat& a, const Vec& x) {
  int rows = (int)a.size();
  Vec out = vec_zero(rows);
  for (int i = 0; i < rows; ++i) {
    assert(a[i].size() == x.size());
    for (size_t j = 0; j < x.size(); ++j)
      if (!is_zero(a[i][j])) out[i] += a[i][j] * x[j];
  }
  return out;
}

bool mat_is_zero(const Mat& a) {
  for (const auto& row : a)
    if (!vec_is_zero(row)) return false;
  return true;
}

Mat mat_inverse(Mat a) {
  int n = (int)a.size();
  Mat inv = mat_identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!is_zero(a[r][col])) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::runtime_error("mat_inverse: singular matrix");
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    Rational p = a[col][col];
    for (int c = 0; c < n; ++c) {
      a[col][c] /= p;
      inv[col][c] /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || is_zero(a[r][col])) continue;
      Rational f = a[r][col];
      for (int c = 0; c < n; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

}  // namespace msq
