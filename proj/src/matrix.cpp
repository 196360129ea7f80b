#include "gradus/matrix.hpp"

#include <sstream>
#include <utility>

#include "gradus/errors.hpp"

namespace gradus {

namespace {

constexpr std::uint64_t kAccumulateLimit = std::uint64_t{1} << 62;

// row_target -= factor * row_source, entrywise from column `from`.
void axpy_row(const PrimeField& f, std::span<Scalar> target, std::span<const Scalar> source,
              Scalar factor, std::size_t from) {
  const Scalar neg = f.neg(factor);
  for (std::size_t c = from; c < target.size(); ++c) {
    if (source[c] != 0) target[c] = f.add(target[c], f.mul(neg, source[c]));
  }
}

}  // namespace

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(PrimeField field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(PrimeField field, std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw InputError("from_columns: column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(PrimeField field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("from_rows: row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw InputError("matrix product: shape mismatch");
  Matrix out(field_, rows_, other.cols_);
  const std::uint64_t p = field_.modulus();
  std::vector<std::uint64_t> acc(other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = (*this)(i, k);
      if (a == 0) continue;
      auto brow = other.row(k);
      for (std::size_t j = 0; j < other.cols_; ++j) {
        acc[j] += a * brow[j];
        if (acc[j] >= kAccumulateLimit) acc[j] %= p;
      }
    }
    for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) = static_cast<Scalar>(acc[j] % p);
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InputError("matrix sum: shape mismatch");
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], other.data_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InputError("matrix difference: shape mismatch");
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], other.data_[i]);
  return out;
}

Matrix Matrix::scaled(Scalar s) const {
  Matrix out(*this);
  for (auto& x : out.data_) x = field_.mul(x, s);
  return out;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw InputError("matrix-vector product: shape mismatch");
  Vector out(rows_);
  const std::uint64_t p = field_.modulus();
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    auto r = row(i);
    for (std::size_t k = 0; k < cols_; ++k) {
      acc += static_cast<std::uint64_t>(r[k]) * v[k];
      if (acc >= kAccumulateLimit) acc %= p;
    }
    out[i] = static_cast<Scalar>(acc % p);
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Matrix Matrix::hstack(const Matrix& right) const {
  if (rows_ != right.rows_) throw InputError("hstack: row count mismatch");
  Matrix out(field_, rows_, cols_ + right.cols_);
  out.set_block(0, 0, *this);
  out.set_block(0, cols_, right);
  return out;
}

Matrix Matrix::vstack(const Matrix& below) const {
  if (cols_ != below.cols_) throw InputError("vstack: column count mismatch");
  Matrix out(field_, rows_ + below.rows_, cols_);
  out.set_block(0, 0, *this);
  out.set_block(rows_, 0, below);
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& block) {
  if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_) throw InputError("set_block: out of range");
  for (std::size_t i = 0; i < block.rows_; ++i)
    for (std::size_t j = 0; j < block.cols_; ++j) (*this)(r0 + i, c0 + j) = block(i, j);
}

void Matrix::add_block(std::size_t r0, std::size_t c0, const Matrix& block) {
  if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_) throw InputError("add_block: out of range");
  for (std::size_t i = 0; i < block.rows_; ++i)
    for (std::size_t j = 0; j < block.cols_; ++j)
      (*this)(r0 + i, c0 + j) = field_.add((*this)(r0 + i, c0 + j), block(i, j));
}

bool Matrix::is_zero() const {
  for (Scalar x : data_)
    if (x != 0) return false;
  return true;
}

bool Matrix::operator==(const Matrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

RrefResult rref(Matrix m) {
  const PrimeField f = m.field();
  RrefResult out;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < m.rows() && m(r, c) == 0) ++r;
    if (r == m.rows()) continue;
    if (r != pivot_row) {
      auto a = m.row(r);
      auto b = m.row(pivot_row);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    auto prow = m.row(pivot_row);
    const Scalar inv = f.inv(prow[c]);
    for (std::size_t k = c; k < m.cols(); ++k) prow[k] = f.mul(prow[k], inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row) continue;
      const Scalar factor = m(i, c);
      if (factor != 0) axpy_row(f, m.row(i), m.row(pivot_row), factor, c);
    }
    out.pivots.push_back(c);
    ++pivot_row;
  }
  out.rank = out.pivots.size();
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> columns;
  for (std::size_t freec = 0; freec < m.cols(); ++freec) {
    if (is_pivot[freec]) continue;
    Vector v(m.cols(), 0);
    v[freec] = 1;
    for (std::size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = m.field().neg(r.reduced(k, freec));
    columns.push_back(std::move(v));
  }
  return Matrix::from_columns(m.field(), m.cols(), columns);
}

std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b) {
  if (b.size() != m.rows()) throw InputError("solve: right-hand side has wrong length");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols()) = m.field().reduce(b[i]);
  const RrefResult r = rref(std::move(aug));
  if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols(), 0);
  for (std::size_t k = 0; k < r.pivots.size(); ++k) x[r.pivots[k]] = r.reduced(k, m.cols());
  return x;
}

Subspace Subspace::span_of_rows(const Matrix& rows) {
  RrefResult r = rref(rows);
  Subspace s;
  s.basis_ = Matrix(rows.field(), r.rank, rows.cols());
  for (std::size_t k = 0; k < r.rank; ++k) {
    auto src = r.reduced.row(k);
    std::copy(src.begin(), src.end(), s.basis_.row(k).begin());
  }
  s.pivots_ = std::move(r.pivots);
  return s;
}

Subspace Subspace::span_of_columns(const Matrix& columns) { return span_of_rows(columns.transpose()); }

Subspace Subspace::whole(PrimeField field, std::size_t ambient) {
  return span_of_rows(Matrix::identity(field, ambient));
}

Vector Subspace::basis_vector(std::size_t k) const {
  auto r = basis_.row(k);
  return Vector(r.begin(), r.end());
}

std::optional<Vector> Subspace::coordinates(std::span<const Scalar> v) const {
  if (v.size() != ambient()) throw InputError("Subspace::coordinates: wrong ambient dimension");
  if (dim() == ambient()) return Vector(v.begin(), v.end());
  const PrimeField& f = basis_.field();
  Vector coords(dim());
  Vector residual(v.begin(), v.end());
  for (std::size_t k = 0; k < dim(); ++k) {
    coords[k] = residual[pivots_[k]];
    if (coords[k] != 0) axpy_row(f, residual, basis_.row(k), coords[k], 0);
  }
  for (Scalar x : residual)
    if (x != 0) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t k = 0; k < other.dim(); ++k)
    if (!contains(other.basis_.row(k))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& other) const {
  return basis_ == other.basis_ && pivots_ == other.pivots_;
}

Subquotient::Subquotient(Subspace z, const Matrix& b_columns) : cycles_(std::move(z)) {
  const PrimeField f = b_columns.field();
  std::vector<Vector> coord_rows;
  coord_rows.reserve(b_columns.cols());
  for (std::size_t c = 0; c < b_columns.cols(); ++c) {
    auto coords = cycles_.coordinates(b_columns.column(c));
    if (!coords) throw DiagnosticError("Subquotient: boundary vector outside the cycle space");
    coord_rows.push_back(std::move(*coords));
  }
  RrefResult r = rref(Matrix::from_rows(f, cycles_.dim(), coord_rows));
  boundary_rref_ = Matrix(f, r.rank, cycles_.dim());
  for (std::size_t k = 0; k < r.rank; ++k) {
    auto src = r.reduced.row(k);
    std::copy(src.begin(), src.end(), boundary_rref_.row(k).begin());
  }
  boundary_pivots_ = r.pivots;
  std::vector<bool> is_pivot(cycles_.dim(), false);
  for (auto p : boundary_pivots_) is_pivot[p] = true;
  for (std::size_t k = 0; k < cycles_.dim(); ++k)
    if (!is_pivot[k]) free_.push_back(k);
}

Vector Subquotient::lift(std::size_t k) const { return cycles_.basis_vector(free_.at(k)); }

std::optional<Vector> Subquotient::project(std::span<const Scalar> v) const {
  auto coords = cycles_.coordinates(v);
  if (!coords) return std::nullopt;
  const PrimeField& f = cycles_.basis_rows().field();
  for (std::size_t k = 0; k < boundary_pivots_.size(); ++k) {
    const Scalar factor = (*coords)[boundary_pivots_[k]];
    if (factor != 0) axpy_row(f, *coords, boundary_rref_.row(k), factor, 0);
  }
  Vector out(free_.size());
  for (std::size_t k = 0; k < free_.size(); ++k) out[k] = (*coords)[free_[k]];
  return out;
}

Vector Subquotient::boundary_combination(std::span<const Scalar> coeffs) const {
  const Matrix& basis = cycles_.basis_rows();
  const PrimeField& f = basis.field();
  Vector z(cycles_.dim(), 0);
  for (std::size_t k = 0; k < boundary_pivots_.size(); ++k)
    if (coeffs[k] != 0) axpy_row(f, z, boundary_rref_.row(k), f.neg(coeffs[k]), 0);
  Vector out(basis.cols(), 0);
  for (std::size_t r = 0; r < z.size(); ++r)
    if (z[r] != 0) axpy_row(f, out, basis.row(r), f.neg(z[r]), 0);
  return out;
}

Matrix induced_map(const Matrix& ambient_map, const Subquotient& source, const Subquotient& target) {
  if (ambient_map.cols() != source.ambient() || ambient_map.rows() != target.ambient())
    throw InputError("induced_map: ambient shape mismatch");
  Matrix out(ambient_map.field(), target.dim(), source.dim());
  for (std::size_t k = 0; k < source.dim(); ++k) {
    auto image = target.project(ambient_map.apply(source.lift(k)));
    if (!image) throw DiagnosticError("induced_map: a cycle is not mapped to a cycle");
    for (std::size_t r = 0; r < target.dim(); ++r) out(r, k) = (*image)[r];
  }
  // One pseudo-random combination of the source boundaries; a boundary that
  // escapes the target boundaries is caught with probability >= 1 - 1/p.
  if (source.boundary_dim() > 0) {
    const PrimeField& f = ambient_map.field();
    std::uint64_t state = 0x9e3779b97f4a7c15ULL ^ (source.ambient() * 1315423911ULL + source.boundary_dim());
    Vector coeffs(source.boundary_dim());
    for (auto& c : coeffs) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      c = static_cast<Scalar>((state >> 33) % f.modulus());
    }
    auto image = target.project(ambient_map.apply(source.boundary_combination(coeffs)));
    if (!image) throw DiagnosticError("induced_map: a boundary is not mapped to a cycle");
    for (Scalar v : *image)
      if (v != 0) throw DiagnosticError("induced_map: a boundary is not mapped to a boundary");
  }
  return out;
}

}  // namespace gradus
