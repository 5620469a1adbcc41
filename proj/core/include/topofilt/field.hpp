#pragma once

// Exact linear algebra over a prime field GF(p), p = 2 by default.
// All bases produced here use deterministic pivoting (leftmost nonzero
// column, first available row), so downstream homology generators and
// reports are reproducible byte-for-byte.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace topofilt {

using Scalar = std::uint32_t;  // residue in [0, p)

Scalar fp_add(Scalar a, Scalar b, Scalar p);
Scalar fp_sub(Scalar a, Scalar b, Scalar p);
Scalar fp_mul(Scalar a, Scalar b, Scalar p);
Scalar fp_neg(Scalar a, Scalar p);
Scalar fp_inv(Scalar a, Scalar p);

bool is_prime(Scalar p);

struct FieldMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  Scalar p = 2;
  std::vector<Scalar> a;  // row-major, rows*cols entries

  FieldMatrix() = default;
  FieldMatrix(std::size_t r, std::size_t c, Scalar prime);

  Scalar& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  Scalar at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  static FieldMatrix identity(std::size_t n, Scalar prime);

  bool is_zero() const;
  std::vector<Scalar> column(std::size_t c) const;
  bool operator==(const FieldMatrix& o) const = default;
};

FieldMatrix multiply(const FieldMatrix& A, const FieldMatrix& B);
std::vector<Scalar> apply_matrix(const FieldMatrix& A, const std::vector<Scalar>& x);

struct ReducedForm {
  FieldMatrix rref;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column per pivot row, ascending
};

ReducedForm reduce(const FieldMatrix& M);

std::size_t rank_of(const FieldMatrix& M);

// A list of linearly independent coordinate vectors in GF(p)^ambient_dim.
struct Subspace {
  std::size_t ambient_dim = 0;
  Scalar p = 2;
  std::vector<std::vector<Scalar>> basis;

  Subspace() = default;
  Subspace(std::size_t ambient, Scalar prime) : ambient_dim(ambient), p(prime) {}

  std::size_t dim() const { return basis.size(); }
  static Subspace full(std::size_t ambient, Scalar prime);
  FieldMatrix basis_matrix() const;  // ambient_dim x dim, basis as columns
};

Subspace kernel_basis(const FieldMatrix& M);
Subspace image_basis(const FieldMatrix& M);

// Solves A x = b column by column; ok[j] is false when column j has no
// solution (free variables are set to zero, so solutions are deterministic).
struct SolveResult {
  FieldMatrix solutions;  // cols(A) x cols(rhs)
  std::vector<bool> ok;
};
SolveResult solve_many(const FieldMatrix& A, const FieldMatrix& rhs);

std::optional<std::vector<Scalar>> solve_membership(const Subspace& S,
                                                    const std::vector<Scalar>& v);
bool contains(const Subspace& S, const std::vector<Scalar>& v);

Subspace intersect(const Subspace& S1, const Subspace& S2);

// Basis of the last subspace of a nested chain V1 <= V2 <= ... <= Vk whose
// first dim(Vi) vectors span Vi; levels[j] is the least 1-based i with
// vectors[j] in Vi.
struct AdaptedBasis {
  std::vector<std::vector<Scalar>> vectors;
  std::vector<std::size_t> levels;
};
AdaptedBasis adapted_basis(const std::vector<Subspace>& chain);

}  // namespace topofilt
