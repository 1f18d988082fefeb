#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ncj/field.hpp"

namespace ncj {

using Vec = std::vector<FieldValue>;

/// Dense row-major matrix over one field.  Entries from Q are promoted into
/// the matrix field on assignment through set().
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field field);
  static Matrix identity(std::size_t n, const Field& field);
  static Matrix from_rows(const std::vector<Vec>& rows, const Field& field, std::size_t cols = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }
  const FieldValue& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, const FieldValue& v);
  Vec row(std::size_t r) const;
  void append_row(const Vec& row);

  bool is_zero() const;
  Matrix transpose() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const FieldValue& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);
  /// Row vector times matrix (the right-action convention x -> xM).
  friend Vec operator*(const Vec& v, const Matrix& m);

  /// Maps every entry into `target`, binding variables as given.
  Matrix substitute(const Field& target, const std::map<std::string, FieldValue>& bindings) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Field field_;
  std::vector<FieldValue> data_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination.  Over function fields the rank is the generic
/// rank; specialize first to study particular parameter values.  Pivots are
/// chosen by lowest complexity among candidate rows.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Null space of m acting on column vectors; every vector is scaled so its
/// first nonzero coordinate is 1.
std::vector<Vec> kernel_basis(const Matrix& m);
/// A solution of m x = b, or none.
std::optional<Vec> solve(const Matrix& m, const Vec& b);
FieldValue determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/// Coefficients expressing v in the span of the given vectors, or none.
std::optional<Vec> coordinates_in_span(const std::vector<Vec>& span, const Vec& v, const Field& field);
/// Echelon basis (rows of the rref) of the span.
std::vector<Vec> echelon_basis(const std::vector<Vec>& vectors, const Field& field);

bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const FieldValue& s, const Vec& v);

}  // namespace ncj
