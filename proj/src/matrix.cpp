#include "qrep/matrix.hpp"

#include <sstream>
#include <utility>

#include "qrep/error.hpp"

namespace qrep {

namespace {

// Elimination runs on raw mpq_class or residue grids; Scalar is too heavy for
// the inner loop.
struct RationalOps {
  using value_type = mpq_class;
  explicit RationalOps(Field) {}
  value_type load(const Scalar& s) const { return s.rational(); }
  Scalar store(Field f, const value_type& v) const { return Scalar(f, v); }
  static bool is_zero(const value_type& v) { return sgn(v) == 0; }
  value_type inverse(const value_type& v) const { return 1 / v; }
  void scale(value_type& v, const value_type& by) const { v *= by; }
  // v -= factor * w
  void sub_mul(value_type& v, const value_type& factor, const value_type& w) const { v -= factor * w; }
};

struct ResidueOps {
  using value_type = std::uint64_t;
  explicit ResidueOps(Field f) : p(f.characteristic()) {}
  value_type load(const Scalar& s) const { return s.residue(); }
  Scalar store(Field f, value_type v) const { return Scalar(f, static_cast<long>(v)); }
  static bool is_zero(value_type v) { return v == 0; }
  value_type inverse(value_type v) const {
    value_type result = 1;
    value_type base = v;
    value_type e = p - 2;
    while (e > 0) {
      if (e & 1U) result = result * base % p;
      base = base * base % p;
      e >>= 1U;
    }
    return result;
  }
  void scale(value_type& v, value_type by) const { v = v * by % p; }
  void sub_mul(value_type& v, value_type factor, value_type w) const { v = (v + p - factor * w % p) % p; }
  value_type p;
};

template <typename Ops>
RrefResult rref_with(const Matrix& m) {
  Ops ops(m.field());
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<typename Ops::value_type> grid(rows * cols);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!m.entries()[i].is_zero()) grid[i] = ops.load(m.entries()[i]);
  }
  auto at = [&](std::size_t r, std::size_t c) -> typename Ops::value_type& { return grid[r * cols + c]; };

  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t found = lead;
    while (found < rows && Ops::is_zero(at(found, c))) ++found;
    if (found == rows) continue;
    if (found != lead) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(at(found, k), at(lead, k));
    }
    const auto inv = ops.inverse(at(lead, c));
    for (std::size_t k = c; k < cols; ++k) ops.scale(at(lead, k), inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || Ops::is_zero(at(r, c))) continue;
      const auto factor = at(r, c);
      for (std::size_t k = c; k < cols; ++k) {
        if (!Ops::is_zero(at(lead, k))) ops.sub_mul(at(r, k), factor, at(lead, k));
      }
    }
    pivots.push_back(c);
    ++lead;
  }

  Matrix reduced(m.field(), rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (!Ops::is_zero(at(r, c))) reduced(r, c) = ops.store(m.field(), at(r, c));
    }
  }
  return {std::move(reduced), std::move(pivots)};
}

void require_same_field(const Matrix& a, const Matrix& b, const char* what) {
  if (a.field() != b.field()) {
    throw ShapeError(std::string(what) + ": matrices over " + a.field().name() + " and " + b.field().name());
  }
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols) : field_(field), rows_(rows), cols_(cols) {
  // Built one by one: copying a zero rational would allocate.
  data_.reserve(rows * cols);
  for (std::size_t i = 0; i < rows * cols; ++i) data_.emplace_back(field, 0L);
}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::span<const long> entries)
    : field_(field), rows_(rows), cols_(cols) {
  if (entries.size() != rows * cols) {
    throw ShapeError("expected " + std::to_string(rows * cols) + " entries, got " + std::to_string(entries.size()));
  }
  data_.reserve(entries.size());
  for (long v : entries) data_.emplace_back(field, v);
}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::initializer_list<long> entries)
    : Matrix(field, rows, cols, std::span<const long>(entries.begin(), entries.size())) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::column(Field field, std::span<const long> entries) {
  return Matrix(field, entries.size(), 1, entries);
}

bool Matrix::is_zero() const {
  for (const auto& s : data_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::column_block(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw ShapeError("column block out of range");
  Matrix out(field_, rows_, count);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, first + c);
  }
  return out;
}

Matrix Matrix::row_block(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw ShapeError("row block out of range");
  Matrix out(field_, count, cols_);
  for (std::size_t r = 0; r < count; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(first + r, c);
  }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_field(*this, other, "addition");
  if (rows_ != other.rows_ || cols_ != other.cols_) throw ShapeError("addition of differently shaped matrices");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_field(*this, other, "subtraction");
  if (rows_ != other.rows_ || cols_ != other.cols_) throw ShapeError("subtraction of differently shaped matrices");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "product");
  if (a.cols_ != b.rows_) {
    throw ShapeError("product of " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " and " +
                     std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        if (!b(k, c).is_zero()) out(r, c) += x * b(k, c);
      }
    }
  }
  return out;
}

Matrix operator*(const Scalar& s, Matrix m) {
  for (auto& x : m.data_) x = s * x;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix Matrix::change_field(Field target) const {
  Matrix out(target, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    const Scalar& s = data_[i];
    out.data_[i] = field_.is_rational() ? Scalar(target, s.rational()) : Scalar(target, static_cast<long>(s.residue()));
  }
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r == 0 ? "[" : ", [");
    for (std::size_t c = 0; c < cols_; ++c) os << (c == 0 ? "" : ", ") << (*this)(r, c).to_string();
    os << ']';
  }
  os << ']';
  return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "hstack");
  if (a.rows() != b.rows()) throw ShapeError("hstack of matrices with different row counts");
  Matrix out(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "vstack");
  if (a.cols() != b.cols()) throw ShapeError("vstack of matrices with different column counts");
  Matrix out(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  }
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, c) = b(r, c);
  }
  return out;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "block_diagonal");
  Matrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  }
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  }
  return out;
}

Matrix repeat_diagonal(const Matrix& m, std::size_t copies) {
  Matrix out(m.field(), m.rows() * copies, m.cols() * copies);
  for (std::size_t k = 0; k < copies; ++k) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) out(k * m.rows() + r, k * m.cols() + c) = m(r, c);
    }
  }
  return out;
}

RrefResult rref(const Matrix& m) {
  return m.field().is_rational() ? rref_with<RationalOps>(m) : rref_with<ResidueOps>(m);
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Matrix> kernel_basis(const Matrix& m) {
  const auto [reduced, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<Matrix> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Matrix v(m.field(), m.cols(), 1);
    v(free, 0) = Scalar::one(m.field());
    for (std::size_t r = 0; r < pivots.size(); ++r) v(pivots[r], 0) = -reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix kernel_matrix(const Matrix& m) {
  const auto basis = kernel_basis(m);
  Matrix out(m.field(), m.cols(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t r = 0; r < m.cols(); ++r) out(r, j) = basis[j](r, 0);
  }
  return out;
}

std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "solve_linear");
  if (b.cols() != 1 || b.rows() != a.rows()) {
    throw ShapeError("right-hand side must be a column of length " + std::to_string(a.rows()));
  }
  const auto [reduced, pivots] = rref(hstack(a, b));
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Matrix x(a.field(), a.cols(), 1);
  for (std::size_t r = 0; r < pivots.size(); ++r) x(pivots[r], 0) = reduced(r, a.cols());
  return x;
}

}  // namespace qrep
