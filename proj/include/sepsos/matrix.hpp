#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sepsos/scalar.hpp"

namespace sepsos {

// Dense row-major matrix over either scalar regime. Sizes here are small
// (dimension below ~200), so no attempt at anything clever.
template <class S>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  S& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Mat& operator+=(const Mat& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  Mat& operator*=(const S& c) {
    for (auto& x : a_) x *= c;
    return *this;
  }
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const S& c) { return a *= c; }
  friend Mat operator*(const S& c, Mat a) { return a *= c; }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Mat: shape mismatch in product");
    Mat r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  Mat transpose() const {
    Mat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }
  Mat conjugate() const {
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = conj_val((*this)(i, j));
    return r;
  }
  Mat adjoint() const {
    Mat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = conj_val((*this)(i, j));
    return r;
  }

  S trace() const {
    if (rows_ != cols_) throw std::invalid_argument("Mat: trace of non-square matrix");
    S t{};
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  typename ScalarTraits<S>::Real frobenius_sq() const {
    typename ScalarTraits<S>::Real t{};
    for (const auto& x : a_) t += abs_sq(x);
    return t;
  }

 private:
  void check_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat: shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<S> a_;
};

using CMat = Mat<Cplx>;
using QMat = Mat<GQ>;

template <class S>
Mat<S> kron(const Mat<S>& a, const Mat<S>& b) {
  Mat<S> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

// xx^dagger for a column vector x.
template <class S>
Mat<S> outer(const std::vector<S>& x) {
  Mat<S> r(x.size(), x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) r(i, j) = x[i] * conj_val(x[j]);
  return r;
}

// Square matrix constrained to be Hermitian. The exact regime demands exact
// symmetry; the floating regime tolerates 1e-12 absolute skew and then
// symmetrizes.
template <class S>
class HermitianMatrix {
 public:
  HermitianMatrix() = default;

  explicit HermitianMatrix(Mat<S> m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw std::invalid_argument("HermitianMatrix: non-square input");
    if constexpr (ScalarTraits<S>::exact) {
      for (std::size_t i = 0; i < m_.rows(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
          if (m_(i, j) != conj_val(m_(j, i)))
            throw std::invalid_argument("HermitianMatrix: input is not Hermitian");
    } else {
      for (std::size_t i = 0; i < m_.rows(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
          Cplx skew = m_(i, j) - conj_val(m_(j, i));
          if (std::abs(skew) > 1e-12)
            throw std::invalid_argument("HermitianMatrix: input exceeds Hermitian tolerance");
          Cplx avg = (m_(i, j) + conj_val(m_(j, i))) * 0.5;
          m_(i, j) = avg;
          m_(j, i) = conj_val(avg);
        }
    }
  }

  static HermitianMatrix zero(std::size_t n) {
    HermitianMatrix h;
    h.m_ = Mat<S>(n, n);
    return h;
  }
  static HermitianMatrix identity(std::size_t n) {
    HermitianMatrix h;
    h.m_ = Mat<S>::identity(n);
    return h;
  }
  // For matrices Hermitian by construction; skips the tolerance check.
  static HermitianMatrix trusted(Mat<S> m) {
    HermitianMatrix h;
    h.m_ = std::move(m);
    return h;
  }

  std::size_t dim() const { return m_.rows(); }
  const Mat<S>& mat() const { return m_; }
  const S& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

 private:
  Mat<S> m_;
};

using CHerm = HermitianMatrix<Cplx>;
using QHerm = HermitianMatrix<GQ>;

inline CMat to_floating(const QMat& m) {
  CMat out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = to_cplx(m(i, j));
  return out;
}

inline CHerm to_floating(const QHerm& m) { return CHerm::trusted(to_floating(m.mat())); }

inline std::vector<Cplx> to_floating(const std::vector<GQ>& v) {
  std::vector<Cplx> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_cplx(v[i]);
  return out;
}

}  // namespace sepsos
