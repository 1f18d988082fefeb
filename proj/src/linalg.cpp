#include "ncj/linalg.hpp"

#include <algorithm>

namespace ncj {

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(std::move(field)), data_(rows * cols, field_.zero()) {}

Matrix Matrix::identity(std::size_t n, const Field& field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, field.one());
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, const Field& field, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  Matrix m(0, cols, field);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, const FieldValue& v) {
  if (r >= rows_ || c >= cols_) throw Error(ErrorKind::SizeMismatch, "matrix index out of range");
  data_[r * cols_ + c] = field_.embed(v);
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_), data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Matrix::append_row(const Vec& row) {
  if (row.size() != cols_) throw Error(ErrorKind::SizeMismatch, "row length");
  for (const auto& v : row) data_.push_back(field_.embed(v));
  ++rows_;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const FieldValue& v) { return v.is_zero(); });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = at(r, c);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::SizeMismatch, "matrix product");
  Matrix out(a.rows_, b.cols_, a.field_.join(b.field_));
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const FieldValue& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const FieldValue& y = b.at(k, j);
        if (!y.is_zero()) out.data_[i * out.cols_ + j] += x * y;
      }
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::SizeMismatch, "matrix sum");
  Matrix out(a.rows_, a.cols_, a.field_.join(b.field_));
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (FieldValue(-1L) * b); }

Matrix operator*(const FieldValue& s, const Matrix& a) {
  Matrix out = a;
  for (auto& v : out.data_) v = s * v;
  if (!s.is_rational()) out.field_ = a.field_.join(s.field());
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    if (!(a.data_[i] == b.data_[i])) return false;
  return true;
}

Vec operator*(const Vec& v, const Matrix& m) {
  if (v.size() != m.rows_) throw Error(ErrorKind::SizeMismatch, "vector-matrix product");
  Vec out(m.cols_, m.field_.zero());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols_; ++j)
      if (!m.at(i, j).is_zero()) out[j] += v[i] * m.at(i, j);
  }
  return out;
}

Matrix Matrix::substitute(const Field& target, const std::map<std::string, FieldValue>& bindings) const {
  Matrix out(rows_, cols_, target);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i].substitute(target, bindings);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

using SparseRow = std::vector<std::pair<std::size_t, FieldValue>>;

SparseRow to_sparse(const Matrix& m, std::size_t r) {
  SparseRow row;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!m.at(r, c).is_zero()) row.emplace_back(c, m.at(r, c));
  return row;
}

// target -= factor * pivot
void axpy(SparseRow& target, const FieldValue& factor, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(target.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < target.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
      out.push_back(std::move(target[i++]));
    } else if (i == target.size() || pivot[j].first < target[i].first) {
      out.emplace_back(pivot[j].first, -(factor * pivot[j].second));
      ++j;
    } else {
      FieldValue v = target[i].second - factor * pivot[j].second;
      if (!v.is_zero()) out.emplace_back(target[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  target = std::move(out);
}

const FieldValue* entry(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

struct SparseRref {
  std::vector<SparseRow> rows;  // reduced nonzero rows, pivot order
  std::vector<std::size_t> pivots;
};

SparseRref sparse_rref(std::vector<SparseRow> rows, std::size_t cols) {
  SparseRref out;
  std::vector<SparseRow> pending = std::move(rows);
  pending.erase(std::remove_if(pending.begin(), pending.end(), [](const SparseRow& r) { return r.empty(); }), pending.end());
  for (std::size_t col = 0; col < cols && !pending.empty(); ++col) {
    std::size_t best = pending.size();
    std::pair<unsigned, std::size_t> best_weight{};
    for (std::size_t r = 0; r < pending.size(); ++r) {
      if (pending[r].front().first != col) continue;
      auto w = pending[r].front().second.complexity();
      auto key = std::make_pair(w, pending[r].size());
      if (best == pending.size() || key < std::make_pair(best_weight, pending[best].size())) {
        best = r;
        best_weight = w;
      }
    }
    if (best == pending.size()) continue;
    SparseRow pivot = std::move(pending[best]);
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    FieldValue inv = pivot.front().second.inv();
    for (auto& e : pivot) e.second = e.second * inv;
    for (auto& r : pending)
      if (r.front().first == col) axpy(r, r.front().second, pivot);
    pending.erase(std::remove_if(pending.begin(), pending.end(), [](const SparseRow& r) { return r.empty(); }), pending.end());
    for (auto& r : out.rows)
      if (const FieldValue* v = entry(r, col)) {
        FieldValue f = *v;
        axpy(r, f, pivot);
      }
    out.rows.push_back(std::move(pivot));
    out.pivots.push_back(col);
  }
  return out;
}

std::vector<SparseRow> rows_of(const Matrix& m) {
  std::vector<SparseRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_sparse(m, r));
  return rows;
}

}  // namespace

RrefResult rref(const Matrix& m) {
  SparseRref s = sparse_rref(rows_of(m), m.cols());
  RrefResult out{Matrix(m.rows(), m.cols(), m.field()), s.rows.size(), s.pivots};
  for (std::size_t r = 0; r < s.rows.size(); ++r)
    for (const auto& [c, v] : s.rows[r]) out.reduced.set(r, c, v);
  return out;
}

std::size_t rank(const Matrix& m) { return sparse_rref(rows_of(m), m.cols()).rows.size(); }

std::vector<Vec> kernel_basis(const Matrix& m) {
  SparseRref s = sparse_rref(rows_of(m), m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : s.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols(), m.field().zero());
    v[f] = m.field().one();
    for (std::size_t r = 0; r < s.rows.size(); ++r)
      if (const FieldValue* e = entry(s.rows[r], f)) v[s.pivots[r]] = -*e;
    auto first = std::find_if(v.begin(), v.end(), [](const FieldValue& x) { return !x.is_zero(); });
    if (!first->is_one()) {
      FieldValue inv = first->inv();
      for (auto& x : v) x = x * inv;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw Error(ErrorKind::SizeMismatch, "right-hand side");
  std::vector<SparseRow> rows = rows_of(m);
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (!b[r].is_zero()) rows[r].emplace_back(m.cols(), m.field().embed(b[r]));
  SparseRref s = sparse_rref(std::move(rows), m.cols() + 1);
  Vec x(m.cols(), m.field().zero());
  for (std::size_t r = 0; r < s.rows.size(); ++r) {
    if (s.pivots[r] == m.cols()) return std::nullopt;
    if (const FieldValue* e = entry(s.rows[r], m.cols())) x[s.pivots[r]] = *e;
  }
  return x;
}

FieldValue determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::SizeMismatch, "determinant of non-square matrix");
  std::vector<SparseRow> rows = rows_of(m);
  FieldValue det = m.field().one();
  for (std::size_t col = 0; col < m.cols(); ++col) {
    std::size_t p = col;
    while (p < rows.size() && (rows[p].empty() || rows[p].front().first != col)) ++p;
    if (p == rows.size()) return m.field().zero();
    if (p != col) {
      std::swap(rows[p], rows[col]);
      det = -det;
    }
    const FieldValue pv = rows[col].front().second;
    det = det * pv;
    FieldValue inv = pv.inv();
    for (std::size_t r = col + 1; r < rows.size(); ++r)
      if (!rows[r].empty() && rows[r].front().first == col) axpy(rows[r], rows[r].front().second * inv, rows[col]);
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::SizeMismatch, "inverse of non-square matrix");
  std::size_t n = m.rows();
  std::vector<SparseRow> rows = rows_of(m);
  for (std::size_t r = 0; r < n; ++r) rows[r].emplace_back(n + r, m.field().one());
  SparseRref s = sparse_rref(std::move(rows), 2 * n);
  if (s.rows.size() < n || s.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix out(n, n, m.field());
  for (std::size_t r = 0; r < n; ++r)
    for (const auto& [c, v] : s.rows[r])
      if (c >= n) out.set(r, c - n, v);
  return out;
}

std::optional<Vec> coordinates_in_span(const std::vector<Vec>& span, const Vec& v, const Field& field) {
  if (span.empty()) {
    if (is_zero(v)) return Vec{};
    return std::nullopt;
  }
  Matrix m(v.size(), span.size(), field);
  for (std::size_t j = 0; j < span.size(); ++j)
    for (std::size_t i = 0; i < v.size(); ++i) m.set(i, j, span[j][i]);
  return solve(m, v);
}

std::vector<Vec> echelon_basis(const std::vector<Vec>& vectors, const Field& field) {
  if (vectors.empty()) return {};
  std::size_t cols = vectors.front().size();
  std::vector<SparseRow> rows;
  for (const auto& v : vectors) {
    SparseRow row;
    for (std::size_t c = 0; c < cols; ++c)
      if (!v[c].is_zero()) row.emplace_back(c, field.embed(v[c]));
    rows.push_back(std::move(row));
  }
  SparseRref s = sparse_rref(std::move(rows), cols);
  std::vector<Vec> out;
  for (const auto& r : s.rows) {
    Vec v(cols, field.zero());
    for (const auto& [c, x] : r) v[c] = x;
    out.push_back(std::move(v));
  }
  return out;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const FieldValue& x) { return x.is_zero(); });
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::SizeMismatch, "vector sum");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::SizeMismatch, "vector difference");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec scale(const FieldValue& s, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

}  // namespace ncj
