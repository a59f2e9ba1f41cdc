#pragma once

#include <msq/rational.hpp>

#include <vector>

namespace msq {

// Dense coordinate vector and row-major rectangular matrix. Everything in
// the library that works with small fixed bases (composition algebras,
// operators on them) uses these; large sparse systems go through sparse.hpp.
using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

Vec vec_zero(int n);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& a);
bool vec_is_zero(const Vec& a);

Mat mat_zero(int rows, int cols);
Mat mat_identity(int n);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);
Mat mat_scale(const Rational& c, const Mat& a);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_transpose(const Mat& a);
Mat mat_commutator(const Mat& a, const Mat& b);  // ab - ba
Vec mat_apply(const Mat& a, const Vec& x);
bool mat_is_zero(const Mat& a);
// Exact inverse by Gauss-Jordan elimination; throws std::runtime_error on a
// singular input.
Mat mat_inverse(Mat a);

}  // namespace msq
