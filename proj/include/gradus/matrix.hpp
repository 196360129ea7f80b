#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gradus/field.hpp"

namespace gradus {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over F_p.
class Matrix {
 public:
  Matrix() = default;
  Matrix(PrimeField field, std::size_t rows, std::size_t cols);

  static Matrix identity(PrimeField field, std::size_t n);
  // Columns must all have length `rows`.
  static Matrix from_columns(PrimeField field, std::size_t rows, const std::vector<Vector>& columns);
  static Matrix from_rows(PrimeField field, std::size_t cols, const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PrimeField& field() const { return field_; }

  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;

  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix scaled(Scalar s) const;
  Vector apply(std::span<const Scalar> v) const;
  Matrix transpose() const;

  // Horizontal / vertical concatenation. Shapes must agree.
  Matrix hstack(const Matrix& right) const;
  Matrix vstack(const Matrix& below) const;
  // Copy `block` into this matrix with its top-left corner at (r0, c0).
  void set_block(std::size_t r0, std::size_t c0, const Matrix& block);
  void add_block(std::size_t r0, std::size_t c0, const Matrix& block);

  bool is_zero() const;
  bool operator==(const Matrix& other) const;

  std::string to_string() const;

 private:
  PrimeField field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Gauss-Jordan elimination with first-nonzero pivoting. Pivot rows are
/// normalized to 1 and every pivot column is a unit vector.
RrefResult rref(Matrix m);

std::size_t rank(const Matrix& m);

/// Columns form a basis of ker(m); there are cols - rank of them.
Matrix kernel_basis(const Matrix& m);

/// Some x with m x == b, or nullopt when b is outside the image.
/// Throws InputError when b.size() != m.rows().
std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b);

/// Subspace of F_p^n held by its reduced row echelon basis. The basis vector
/// of index k has a 1 at pivot k and zeros at all other pivots, so the
/// coordinates of a member v are just v[pivots].
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(PrimeField field, std::size_t ambient) : basis_(field, 0, ambient) {}

  static Subspace span_of_columns(const Matrix& columns);
  static Subspace span_of_rows(const Matrix& rows);
  static Subspace whole(PrimeField field, std::size_t ambient);

  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient() const { return basis_.cols(); }
  const Matrix& basis_rows() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector basis_vector(std::size_t k) const;

  // Coordinates in the reduced basis; nullopt when v is not a member.
  std::optional<Vector> coordinates(std::span<const Scalar> v) const;
  bool contains(std::span<const Scalar> v) const { return coordinates(v).has_value(); }
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& other) const;

 private:
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// The quotient Z/B of a subspace Z of F_p^n by a subspace B of Z. The chosen
/// basis of Z/B is the classes of Z-basis vectors at the non-pivot positions
/// of the reduced coordinates of B.
class Subquotient {
 public:
  Subquotient() = default;
  // b_columns must lie in z. Throws DiagnosticError otherwise.
  Subquotient(Subspace z, const Matrix& b_columns);

  std::size_t dim() const { return free_.size(); }
  std::size_t ambient() const { return cycles_.ambient(); }
  const Subspace& cycles() const { return cycles_; }

  Vector lift(std::size_t k) const;
  std::size_t boundary_dim() const { return boundary_pivots_.size(); }
  // Ambient vector of Σ coeffs[k] b_k over the reduced boundary basis.
  Vector boundary_combination(std::span<const Scalar> coeffs) const;
  // Class of v in the chosen basis; nullopt when v is not in Z.
  std::optional<Vector> project(std::span<const Scalar> v) const;

 private:
  Subspace cycles_;
  Matrix boundary_rref_;  // reduced coordinates (in Z) of B
  std::vector<std::size_t> boundary_pivots_;
  std::vector<std::size_t> free_;
};

/// Matrix of the map induced by `ambient_map` between subquotients.
/// Throws DiagnosticError if the map does not carry cycles into cycles and
/// boundaries into boundaries.
Matrix induced_map(const Matrix& ambient_map, const Subquotient& source, const Subquotient& target);

}  // namespace gradus
