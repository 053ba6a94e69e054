#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "vwt/error.hpp"
#include "vwt/ring_traits.hpp"

namespace vwt {

/// Dense matrix with ordered row and column labels. Label order is part of
/// the value.
template <class E>
class LabeledMatrix {
 public:
  using context_type = typename E::context_type;

  LabeledMatrix(context_type ctx, std::vector<std::string> rows, std::vector<std::string> cols)
      : ctx_(std::move(ctx)),
        rows_(std::move(rows)),
        cols_(std::move(cols)),
        data_(rows_.size() * cols_.size(), E::zero(ctx_)) {}

  static LabeledMatrix square(const context_type& ctx, const std::vector<std::string>& labels) {
    return LabeledMatrix(ctx, labels, labels);
  }

  static LabeledMatrix identity(const context_type& ctx, const std::vector<std::string>& labels) {
    LabeledMatrix m(ctx, labels, labels);
    for (std::size_t i = 0; i < labels.size(); ++i) m(i, i) = E::one(ctx);
    return m;
  }

  const context_type& context() const noexcept { return ctx_; }
  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_.size(); }
  bool is_square() const noexcept { return rows_.size() == cols_.size(); }
  const std::vector<std::string>& row_labels() const noexcept { return rows_; }
  const std::vector<std::string>& col_labels() const noexcept { return cols_; }

  E& operator()(std::size_t i, std::size_t j) { return data_[i * cols_.size() + j]; }
  const E& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_.size() + j]; }

  E& at(const std::string& r, const std::string& c) { return (*this)(row_index(r), col_index(c)); }
  const E& at(const std::string& r, const std::string& c) const { return (*this)(row_index(r), col_index(c)); }

  std::size_t row_index(const std::string& label) const { return find(rows_, label); }
  std::size_t col_index(const std::string& label) const { return find(cols_, label); }

  LabeledMatrix operator-() const {
    LabeledMatrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
  }

  LabeledMatrix& operator+=(const LabeledMatrix& o) {
    check_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }

  LabeledMatrix& operator-=(const LabeledMatrix& o) {
    check_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }

  friend LabeledMatrix operator+(LabeledMatrix a, const LabeledMatrix& b) { return a += b; }
  friend LabeledMatrix operator-(LabeledMatrix a, const LabeledMatrix& b) { return a -= b; }

  friend LabeledMatrix operator*(const LabeledMatrix& a, const LabeledMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: inner labels differ");
    LabeledMatrix r(a.ctx_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const E& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += x * b(k, j);
      }
    }
    return r;
  }

  LabeledMatrix scaled(const E& c) const {
    LabeledMatrix r = *this;
    for (auto& x : r.data_) x = x * c;
    return r;
  }

  LabeledMatrix transpose() const {
    LabeledMatrix r(ctx_, cols_, rows_);
    for (std::size_t i = 0; i < rows(); ++i) {
      for (std::size_t j = 0; j < cols(); ++j) r(j, i) = (*this)(i, j);
    }
    return r;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const E& x) { return x.is_zero(); });
  }

  /// Entrywise conversion into another ring.
  template <class F, class Fn>
  LabeledMatrix<F> map(const typename F::context_type& target, Fn f) const {
    LabeledMatrix<F> r(target, rows_, cols_);
    for (std::size_t i = 0; i < rows(); ++i) {
      for (std::size_t j = 0; j < cols(); ++j) r(i, j) = f((*this)(i, j));
    }
    return r;
  }

  friend bool operator==(const LabeledMatrix& a, const LabeledMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  static std::size_t find(const std::vector<std::string>& labels, const std::string& label) {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw UnknownLabel("unknown label " + label);
    return static_cast<std::size_t>(it - labels.begin());
  }

  void check_shape(const LabeledMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix labels differ");
  }

  context_type ctx_;
  std::vector<std::string> rows_;
  std::vector<std::string> cols_;
  std::vector<E> data_;
};

/// Fraction-aware elimination, pivoting on the first nonzero entry in
/// declared order.
template <FieldElement E>
E det_gauss(const LabeledMatrix<E>& m) {
  if (!m.is_square()) throw NonSquare("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<std::vector<E>> a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i].reserve(n);
    for (std::size_t j = 0; j < n; ++j) a[i].push_back(m(i, j));
  }
  E det = E::one(m.context());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return E::zero(m.context());
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    E inv = a[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      E f = a[r][col] * inv;
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  return det;
}

/// Division-free determinant (Berkowitz). Valid over any commutative ring.
template <RingElement E>
E det_berkowitz(const LabeledMatrix<E>& m) {
  if (!m.is_square()) throw NonSquare("determinant of a non-square matrix");
  const auto& ctx = m.context();
  const std::size_t n = m.rows();
  // q holds the characteristic polynomial of the leading r x r block,
  // highest degree first: det(xI - A_r) = sum q[k] x^{r-k}.
  std::vector<E> q{E::one(ctx)};
  for (std::size_t r = 0; r < n; ++r) {
    // Toeplitz column: 1, -a_rr, -R C, -R S C, ..., -R S^{r-1} C.
    std::vector<E> col;
    col.reserve(r + 2);
    col.push_back(E::one(ctx));
    col.push_back(-m(r, r));
    std::vector<E> v;
    v.reserve(r);
    for (std::size_t i = 0; i < r; ++i) v.push_back(m(i, r));
    for (std::size_t k = 0; k < r; ++k) {
      E dot = E::zero(ctx);
      for (std::size_t i = 0; i < r; ++i) dot += m(r, i) * v[i];
      col.push_back(-dot);
      if (k + 1 == r) break;
      std::vector<E> next(r, E::zero(ctx));
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) next[i] += m(i, j) * v[j];
      }
      v = std::move(next);
    }
    std::vector<E> nq(r + 2, E::zero(ctx));
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, r); ++j) nq[i] += col[i - j] * q[j];
    }
    q = std::move(nq);
  }
  return n % 2 == 0 ? q[n] : -q[n];
}

/// Gauss over fields, Berkowitz otherwise.
template <RingElement E>
E determinant(const LabeledMatrix<E>& m) {
  if constexpr (FieldElement<E>) {
    return det_gauss(m);
  } else {
    return det_berkowitz(m);
  }
}

/// Deletes the listed rows and columns.
template <class E>
LabeledMatrix<E> minor(const LabeledMatrix<E>& m, const std::vector<std::string>& drop_rows,
                       const std::vector<std::string>& drop_cols) {
  std::vector<bool> keep_r(m.rows(), true);
  std::vector<bool> keep_c(m.cols(), true);
  for (const auto& l : drop_rows) keep_r[m.row_index(l)] = false;
  for (const auto& l : drop_cols) keep_c[m.col_index(l)] = false;
  std::vector<std::size_t> ri;
  std::vector<std::size_t> ci;
  std::vector<std::string> rl;
  std::vector<std::string> cl;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (keep_r[i]) {
      ri.push_back(i);
      rl.push_back(m.row_labels()[i]);
    }
  }
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (keep_c[j]) {
      ci.push_back(j);
      cl.push_back(m.col_labels()[j]);
    }
  }
  LabeledMatrix<E> r(m.context(), rl, cl);
  for (std::size_t i = 0; i < ri.size(); ++i) {
    for (std::size_t j = 0; j < ci.size(); ++j) r(i, j) = m(ri[i], ci[j]);
  }
  return r;
}

/// adj(m)(i,j) = (-1)^{i+j} det(m without row j and column i).
template <RingElement E>
LabeledMatrix<E> adjugate(const LabeledMatrix<E>& m) {
  if (!m.is_square()) throw NonSquare("adjugate of a non-square matrix");
  LabeledMatrix<E> r(m.context(), m.col_labels(), m.row_labels());
  const std::size_t n = m.rows();
  if (n == 1) {
    r(0, 0) = E::one(m.context());
    return r;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      E c = determinant(minor(m, {m.row_labels()[j]}, {m.col_labels()[i]}));
      r(i, j) = (i + j) % 2 == 0 ? c : -c;
    }
  }
  return r;
}

/// Kronecker product; pair labels "(a,b)" in lexicographic order.
template <RingElement E>
LabeledMatrix<E> kronecker(const LabeledMatrix<E>& a, const LabeledMatrix<E>& b) {
  auto pairs = [](const std::vector<std::string>& x, const std::vector<std::string>& y) {
    std::vector<std::string> out;
    out.reserve(x.size() * y.size());
    for (const auto& s : x) {
      for (const auto& t : y) out.push_back("(" + s + "," + t + ")");
    }
    return out;
  };
  LabeledMatrix<E> r(a.context(), pairs(a.row_labels(), b.row_labels()), pairs(a.col_labels(), b.col_labels()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
      }
    }
  }
  return r;
}

/// Block-diagonal sum; labels of a then b (must be distinct).
template <RingElement E>
LabeledMatrix<E> direct_sum(const LabeledMatrix<E>& a, const LabeledMatrix<E>& b) {
  std::vector<std::string> rl = a.row_labels();
  std::vector<std::string> cl = a.col_labels();
  rl.insert(rl.end(), b.row_labels().begin(), b.row_labels().end());
  cl.insert(cl.end(), b.col_labels().begin(), b.col_labels().end());
  LabeledMatrix<E> r(a.context(), rl, cl);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
  }
  return r;
}

}  // namespace vwt
