#ifndef FQK_INTEGER_HPP
#define FQK_INTEGER_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fqk/error.hpp"

namespace fqk {

using Integer = boost::multiprecision::cpp_int;

inline double to_double(const Integer& x) { return x.convert_to<double>(); }

/// Integer coefficient vector over a fixed basis of simples. The tag keeps
/// classes in [C] and classes in [M] from being mixed up.
template <class Tag>
class ClassVector {
 public:
  ClassVector() = default;
  explicit ClassVector(std::size_t n) : coeffs_(n) {}
  explicit ClassVector(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {}
  ClassVector(std::initializer_list<long long> init) {
    coeffs_.reserve(init.size());
    for (long long v : init) coeffs_.emplace_back(v);
  }

  static ClassVector basis(std::size_t n, std::size_t i) {
    ClassVector v(n);
    v.coeffs_.at(i) = 1;
    return v;
  }

  std::size_t size() const noexcept { return coeffs_.size(); }
  const Integer& operator[](std::size_t i) const { return coeffs_[i]; }
  Integer& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
  }
  /// Realizable as the class of an object (possibly zero).
  bool is_nonnegative() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c >= 0; });
  }
  bool is_nonpositive() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c <= 0; });
  }
  bool is_positive() const { return is_nonnegative() && !is_zero(); }
  bool is_negative() const { return is_nonpositive() && !is_zero(); }

  ClassVector& operator+=(const ClassVector& o) {
    check_size(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  ClassVector& operator-=(const ClassVector& o) {
    check_size(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  ClassVector& operator*=(const Integer& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  friend ClassVector operator+(ClassVector a, const ClassVector& b) { return a += b; }
  friend ClassVector operator-(ClassVector a, const ClassVector& b) { return a -= b; }
  friend ClassVector operator-(ClassVector a) { return a *= Integer(-1); }
  friend ClassVector operator*(const Integer& s, ClassVector a) { return a *= s; }

  friend bool operator==(const ClassVector& a, const ClassVector& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator<(const ClassVector& a, const ClassVector& b) {
    return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(),
                                        b.coeffs_.end());
  }

  std::string str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i];
    os << ')';
    return os.str();
  }

 private:
  void check_size(const ClassVector& o) const {
    if (o.size() != size())
      throw Error(ErrorKind::DimensionMismatch,
                  "class vectors of length " + std::to_string(size()) + " and " +
                      std::to_string(o.size()));
  }

  std::vector<Integer> coeffs_;
};

struct RingTag;
struct ModuleTag;
using RingElement = ClassVector<RingTag>;
using ModuleElement = ClassVector<ModuleTag>;

/// Dense integer matrix, row-major. Action matrices use the column-vector
/// convention: entry (row L', col L) is the multiplicity of L' in X (x) L.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
      for (long long v : row) data_.emplace_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& c) { return c == 0; });
  }
  bool is_nonnegative() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& c) { return c >= 0; });
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  IntMatrix& operator+=(const IntMatrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  IntMatrix& operator-=(const IntMatrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator*(const Integer& s, IntMatrix a) {
    for (auto& v : a.data_) v *= s;
    return a;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shapes");
    IntMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
      }
    return p;
  }

  template <class Tag>
  ClassVector<Tag> apply(const ClassVector<Tag>& v) const {
    if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shapes");
    ClassVector<Tag> out(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c] == 0) continue;
      for (std::size_t r = 0; r < rows_; ++r) out[r] += (*this)(r, c) * v[c];
    }
    return out;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::vector<std::vector<double>> to_double() const {
    std::vector<std::vector<double>> out(rows_, std::vector<double>(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c).convert_to<double>();
    return out;
  }

 private:
  void check_same_shape(const IntMatrix& o) const {
    if (o.rows_ != rows_ || o.cols_ != cols_)
      throw Error(ErrorKind::DimensionMismatch, "matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

}  // namespace fqk

#endif  // FQK_INTEGER_HPP
