#include "cubecrys/matrix.hpp"

#include <sstream>
#include <utility>

#include "cubecrys/error.hpp"

namespace cubecrys {

namespace {

void require_square(const RatMatrix &m, const char *what) {
  if (!m.is_square()) {
    std::ostringstream msg;
    msg << what << ": expected a square matrix, got " << m.rows() << "x" << m.cols();
    throw DimensionError(msg.str());
  }
}

} // namespace

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto &r : rows) {
    if (r.size() != cols_)
      throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_columns(std::span<const RatVector> columns) {
  std::size_t n = columns.empty() ? 0 : columns.front().size();
  RatMatrix m(n, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != n)
      throw DimensionError("columns of unequal length");
    for (std::size_t r = 0; r < n; ++r)
      m(r, c) = columns[c][r];
  }
  return m;
}

RatMatrix RatMatrix::block_diagonal(const RatMatrix &a, const RatMatrix &b) {
  RatMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      m(a.rows() + r, a.cols() + c) = b(r, c);
  return m;
}

RatVector RatMatrix::column(std::size_t c) const {
  RatVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    v[r] = (*this)(r, c);
  return v;
}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

bool RatMatrix::is_integer() const {
  for (const auto &x : data_)
    if (!x.is_integer())
      return false;
  return true;
}

bool RatMatrix::is_zero() const {
  for (const auto &x : data_)
    if (!x.is_zero())
      return false;
  return true;
}

Rational RatMatrix::trace() const {
  require_square(*this, "trace");
  Rational t;
  for (std::size_t i = 0; i < rows_; ++i)
    t += (*this)(i, i);
  return t;
}

RatMatrix &RatMatrix::operator+=(const RatMatrix &rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw DimensionError("matrix sum of mismatched shapes");
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] += rhs.data_[i];
  return *this;
}

RatMatrix &RatMatrix::operator-=(const RatMatrix &rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw DimensionError("matrix difference of mismatched shapes");
  for (std::size_t i = 0; i < data_.size(); ++i)
    data_[i] -= rhs.data_[i];
  return *this;
}

RatMatrix &RatMatrix::operator*=(const Rational &s) {
  for (auto &x : data_)
    x *= s;
  return *this;
}

std::string RatMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c)
      os << (c ? ", " : "") << (*this)(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

RatMatrix operator+(RatMatrix a, const RatMatrix &b) { return a += b; }
RatMatrix operator-(RatMatrix a, const RatMatrix &b) { return a -= b; }
RatMatrix operator*(RatMatrix a, const Rational &s) { return a *= s; }

RatMatrix operator*(const RatMatrix &a, const RatMatrix &b) {
  if (a.cols() != b.rows())
    throw DimensionError("matrix product of mismatched shapes");
  RatMatrix m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational &aik = a(i, k);
      if (aik.is_zero())
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero())
          m(i, j) += aik * b(k, j);
    }
  return m;
}

RatVector operator*(const RatMatrix &a, const RatVector &v) {
  if (a.cols() != v.size())
    throw DimensionError("matrix-vector product of mismatched shapes");
  RatVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (!a(i, k).is_zero() && !v[k].is_zero())
        out[i] += a(i, k) * v[k];
  return out;
}

Rational dot(const RatVector &a, const RatVector &b) {
  if (a.size() != b.size())
    throw DimensionError("dot product of mismatched lengths");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

RatVector operator+(const RatVector &a, const RatVector &b) {
  if (a.size() != b.size())
    throw DimensionError("vector sum of mismatched lengths");
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] + b[i];
  return out;
}

RatVector operator-(const RatVector &a, const RatVector &b) {
  if (a.size() != b.size())
    throw DimensionError("vector difference of mismatched lengths");
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] - b[i];
  return out;
}

RatVector operator*(const Rational &s, const RatVector &v) {
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = s * v[i];
  return out;
}

Rational det(const RatMatrix &m) {
  require_square(m, "det");
  const std::size_t n = m.rows();
  if (n == 0)
    return 1;
  RatMatrix a = m;
  Rational prev_pivot = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k).is_zero())
        ++swap;
      if (swap == n)
        return 0;
      for (std::size_t c = 0; c < n; ++c)
        std::swap(a(k, c), a(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev_pivot;
      a(i, k) = 0;
    }
    prev_pivot = a(k, k);
  }
  Rational d = a(n - 1, n - 1);
  return sign > 0 ? d : -d;
}

RatMatrix inverse(const RatMatrix &m) {
  require_square(m, "inverse");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero())
      ++pivot;
    if (pivot == n)
      throw SingularMatrixError("matrix is singular (det = " + det(m).str() + ")");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    Rational p = a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) /= p;
      inv(col, c) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero())
        continue;
      Rational f = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

std::size_t rank(const RatMatrix &m) {
  RatMatrix a = m;
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t pivot = r;
    while (pivot < a.rows() && a(pivot, col).is_zero())
      ++pivot;
    if (pivot == a.rows())
      continue;
    for (std::size_t c = 0; c < a.cols(); ++c)
      std::swap(a(pivot, c), a(r, c));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, col).is_zero())
        continue;
      Rational f = a(i, col) / a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        a(i, c) -= f * a(r, c);
    }
    ++r;
  }
  return r;
}

RatMatrix power(const RatMatrix &m, std::size_t k) {
  require_square(m, "power");
  RatMatrix result = RatMatrix::identity(m.rows());
  RatMatrix base = m;
  while (k > 0) {
    if (k & 1U)
      result = result * base;
    k >>= 1U;
    if (k > 0)
      base = base * base;
  }
  return result;
}

std::optional<std::size_t> element_order(const RatMatrix &m, std::size_t cap) {
  require_square(m, "element_order");
  const RatMatrix id = RatMatrix::identity(m.rows());
  RatMatrix p = m;
  for (std::size_t k = 1; k <= cap; ++k) {
    if (p == id)
      return k;
    p = p * m;
  }
  return std::nullopt;
}

RatMatrix average_intertwiner(std::span<const RatMatrix> theta_images,
                              std::span<const RatMatrix> iota_images, const RatMatrix &seed) {
  if (theta_images.size() != iota_images.size())
    throw InputError("average_intertwiner: group lists differ in length");
  require_square(seed, "average_intertwiner");
  RatMatrix sum(seed.rows(), seed.cols());
  for (std::size_t p = 0; p < theta_images.size(); ++p) {
    if (theta_images[p].rows() != seed.rows() || iota_images[p].rows() != seed.rows())
      throw InputError("average_intertwiner: dimension mismatch at element " + std::to_string(p));
    sum += theta_images[p] * seed * inverse(iota_images[p]);
  }
  return sum;
}

} // namespace cubecrys
