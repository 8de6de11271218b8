#pragma once

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "modrep/ring.hpp"

namespace modrep {

// Dense row-major matrix over a single ring. Vectors are rows and all
// module actions are right actions (v -> v*M).
class Matrix {
 public:
  using Data = std::variant<std::vector<uint8_t>, std::vector<mpz_class>,
                            std::vector<mpq_class>, std::vector<ZS2>>;

  Matrix() = default;
  Matrix(Ring ring, size_t rows, size_t cols);  // zero-filled
  static Matrix identity(const Ring& ring, size_t n);

  const Ring& ring() const { return ring_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Scalar at(size_t r, size_t c) const;
  void set(size_t r, size_t c, const Scalar& x);
  void set_int(size_t r, size_t c, long n);

  Data& data() { return data_; }
  const Data& data() const { return data_; }

  // Finite-field fast lane: encoded entries, row-major.
  std::vector<uint8_t>& ff() { return std::get<std::vector<uint8_t>>(data_); }
  const std::vector<uint8_t>& ff() const { return std::get<std::vector<uint8_t>>(data_); }

  bool operator==(const Matrix& o) const;

 private:
  Ring ring_;
  size_t rows_ = 0, cols_ = 0;
  Data data_;
};

Matrix mat_from_int(const Ring& ring, const std::vector<std::vector<long>>& rows);

Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix mat_neg(const Matrix& a);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_pow(const Matrix& a, unsigned long e);
Matrix scalar_mul(const Scalar& c, const Matrix& a);
Matrix transpose(const Matrix& a);
Matrix kron(const Matrix& a, const Matrix& b);
Matrix direct_sum_mat(const Matrix& a, const Matrix& b);
Matrix stack_rows(const Matrix& a, const Matrix& b);
Scalar trace(const Matrix& a);
bool is_zero_matrix(const Matrix& a);

// Entrywise ring changes.
Matrix reduce_mod(const Matrix& m, const Ring& gf);      // Z -> GF(p)
Matrix to_rationals(const Matrix& m);                    // Z -> Q
Matrix to_zs2(const Matrix& m);                          // Z -> Z[sqrt(-2)]
Matrix embed_matrix(const Matrix& m, const Ring& ext);   // GF(p) -> GF(p^k)

// Reduced row echelon form (field rings): pivots 1, pivot columns strictly
// increasing and cleared above, zero rows last. Deterministic: pivots are
// chosen as first nonzero column, smallest row index.
std::pair<Matrix, size_t> rref(const Matrix& m);
size_t rank(const Matrix& m);

// Determinant (field rings and Q).
Scalar mat_det(const Matrix& m);
// Inverse over a field; throws std::invalid_argument when singular.
Matrix mat_inverse(const Matrix& m);
// Inverse of an integral matrix with determinant +-1.
Matrix mat_inverse_int(const Matrix& m);

// Exact solution x of a*x = b for square invertible a over Q.
Matrix solve_exact(const Matrix& a, const Matrix& b);

// Canonical subspace of row vectors: basis stored in RREF, equality is
// entry equality of the echelon bases.
struct Subspace {
  Ring ring;
  size_t ambient = 0;
  Matrix basis;  // dim x ambient, RREF with no zero rows

  size_t dim() const { return basis.rows(); }
  bool operator==(const Subspace& o) const;
};

Subspace row_space(const Matrix& rows);
Subspace zero_subspace(const Ring& ring, size_t ambient);
Subspace full_subspace(const Ring& ring, size_t ambient);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool subspace_leq(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& s, const Matrix& row);
// Ordering for canonical output listings: by dimension, then
// lexicographically by basis entries (finite fields and Q).
bool subspace_less(const Subspace& a, const Subspace& b);

// Right null space {x : m*x = 0}, returned as row vectors of length m.cols().
Subspace null_space(const Matrix& m);

// Residue of each row after clearing the pivot columns of w; the result is
// zero exactly on rows lying in w.
Matrix reduce_rows_mod(const Matrix& rows, const Subspace& w);
// Coordinates of each row in the given basis; throws if a row is outside.
Matrix coords_in_rows(const Matrix& rows, const Matrix& basis);

// Smallest subspace containing seed and invariant under every generator
// acting on the right.
Subspace spin(const Subspace& seed, const std::vector<Matrix>& gens);

}  // namespace modrep
