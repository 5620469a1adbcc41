#include "topofilt/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace topofilt {

Scalar fp_add(Scalar a, Scalar b, Scalar p) { return (a + b) % p; }
Scalar fp_sub(Scalar a, Scalar b, Scalar p) { return (a + p - b) % p; }
Scalar fp_mul(Scalar a, Scalar b, Scalar p) {
  return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p);
}
Scalar fp_neg(Scalar a, Scalar p) { return a == 0 ? 0 : p - a; }

Scalar fp_inv(Scalar a, Scalar p) {
  if (a == 0) throw std::invalid_argument("fp_inv: zero has no inverse");
  // Fermat: a^(p-2) mod p
  Scalar result = 1, base = a % p;
  Scalar e = p - 2;
  while (e > 0) {
    if (e & 1u) result = fp_mul(result, base, p);
    base = fp_mul(base, base, p);
    e >>= 1u;
  }
  return result;
}

bool is_prime(Scalar p) {
  if (p < 2) return false;
  for (Scalar d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

FieldMatrix::FieldMatrix(std::size_t r, std::size_t c, Scalar prime)
    : rows(r), cols(c), p(prime), a(r * c, 0) {
  if (!is_prime(prime)) throw std::invalid_argument("FieldMatrix: p must be prime");
}

FieldMatrix FieldMatrix::identity(std::size_t n, Scalar prime) {
  FieldMatrix m(n, n, prime);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool FieldMatrix::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](Scalar x) { return x == 0; });
}

std::vector<Scalar> FieldMatrix::column(std::size_t c) const {
  std::vector<Scalar> v(rows);
  for (std::size_t r = 0; r < rows; ++r) v[r] = at(r, c);
  return v;
}

FieldMatrix multiply(const FieldMatrix& A, const FieldMatrix& B) {
  if (A.cols != B.rows || A.p != B.p)
    throw std::invalid_argument("multiply: shape or field mismatch");
  FieldMatrix C(A.rows, B.cols, A.p);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t k = 0; k < A.cols; ++k) {
      Scalar aik = A.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < B.cols; ++j) {
        Scalar t = fp_add(C.at(i, j), fp_mul(aik, B.at(k, j), A.p), A.p);
        C.at(i, j) = t;
      }
    }
  return C;
}

std::vector<Scalar> apply_matrix(const FieldMatrix& A, const std::vector<Scalar>& x) {
  if (x.size() != A.cols) throw std::invalid_argument("apply: dimension mismatch");
  std::vector<Scalar> y(A.rows, 0);
  for (std::size_t j = 0; j < A.cols; ++j) {
    if (x[j] == 0) continue;
    for (std::size_t i = 0; i < A.rows; ++i)
      y[i] = fp_add(y[i], fp_mul(A.at(i, j), x[j], A.p), A.p);
  }
  return y;
}

namespace {

// GF(2) fast path: rows packed 64 bits per word.
ReducedForm reduce_gf2(const FieldMatrix& M) {
  const std::size_t words = (M.cols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(M.rows,
                                               std::vector<std::uint64_t>(words, 0));
  for (std::size_t r = 0; r < M.rows; ++r)
    for (std::size_t c = 0; c < M.cols; ++c)
      if (M.at(r, c)) rows[r][c / 64] |= (std::uint64_t{1} << (c % 64));

  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < M.cols && pr < M.rows; ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t sel = M.rows;
    for (std::size_t r = pr; r < M.rows; ++r)
      if (rows[r][w] & bit) {
        sel = r;
        break;
      }
    if (sel == M.rows) continue;
    std::swap(rows[pr], rows[sel]);
    for (std::size_t r = 0; r < M.rows; ++r) {
      if (r != pr && (rows[r][w] & bit)) {
        for (std::size_t k = w; k < words; ++k) rows[r][k] ^= rows[pr][k];
      }
    }
    pivots.push_back(c);
    ++pr;
  }

  ReducedForm out;
  out.rref = FieldMatrix(M.rows, M.cols, 2);
  for (std::size_t r = 0; r < M.rows; ++r)
    for (std::size_t c = 0; c < M.cols; ++c)
      out.rref.at(r, c) = (rows[r][c / 64] >> (c % 64)) & 1u;
  out.rank = pivots.size();
  out.pivots = std::move(pivots);
  return out;
}

}  // namespace

ReducedForm reduce(const FieldMatrix& M) {
  if (M.p == 2) return reduce_gf2(M);

  FieldMatrix A = M;
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < A.cols && pr < A.rows; ++c) {
    std::size_t sel = A.rows;
    for (std::size_t r = pr; r < A.rows; ++r)
      if (A.at(r, c) != 0) {
        sel = r;
        break;
      }
    if (sel == A.rows) continue;
    for (std::size_t k = 0; k < A.cols; ++k) std::swap(A.at(pr, k), A.at(sel, k));
    Scalar inv = fp_inv(A.at(pr, c), A.p);
    for (std::size_t k = c; k < A.cols; ++k) A.at(pr, k) = fp_mul(A.at(pr, k), inv, A.p);
    for (std::size_t r = 0; r < A.rows; ++r) {
      if (r == pr) continue;
      Scalar f = A.at(r, c);
      if (f == 0) continue;
      for (std::size_t k = c; k < A.cols; ++k)
        A.at(r, k) = fp_sub(A.at(r, k), fp_mul(f, A.at(pr, k), A.p), A.p);
    }
    pivots.push_back(c);
    ++pr;
  }
  ReducedForm out;
  out.rref = std::move(A);
  out.rank = pivots.size();
  out.pivots = std::move(pivots);
  return out;
}

std::size_t rank_of(const FieldMatrix& M) { return reduce(M).rank; }

Subspace Subspace::full(std::size_t ambient, Scalar prime) {
  Subspace s(ambient, prime);
  for (std::size_t i = 0; i < ambient; ++i) {
    std::vector<Scalar> e(ambient, 0);
    e[i] = 1;
    s.basis.push_back(std::move(e));
  }
  return s;
}

FieldMatrix Subspace::basis_matrix() const {
  FieldMatrix B(ambient_dim, basis.size(), p);
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < ambient_dim; ++i) B.at(i, j) = basis[j][i];
  return B;
}

Subspace kernel_basis(const FieldMatrix& M) {
  ReducedForm rf = reduce(M);
  Subspace out(M.cols, M.p);
  std::vector<bool> is_pivot(M.cols, false);
  for (std::size_t c : rf.pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < M.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> x(M.cols, 0);
    x[f] = 1;
    for (std::size_t r = 0; r < rf.rank; ++r)
      x[rf.pivots[r]] = fp_neg(rf.rref.at(r, f), M.p);
    out.basis.push_back(std::move(x));
  }
  return out;
}

Subspace image_basis(const FieldMatrix& M) {
  ReducedForm rf = reduce(M);
  Subspace out(M.rows, M.p);
  for (std::size_t c : rf.pivots) out.basis.push_back(M.column(c));
  return out;
}

SolveResult solve_many(const FieldMatrix& A, const FieldMatrix& rhs) {
  if (A.rows != rhs.rows || A.p != rhs.p)
    throw std::invalid_argument("solve_many: shape or field mismatch");
  FieldMatrix aug(A.rows, A.cols + rhs.cols, A.p);
  for (std::size_t r = 0; r < A.rows; ++r) {
    for (std::size_t c = 0; c < A.cols; ++c) aug.at(r, c) = A.at(r, c);
    for (std::size_t c = 0; c < rhs.cols; ++c) aug.at(r, A.cols + c) = rhs.at(r, c);
  }
  ReducedForm rf = reduce(aug);

  SolveResult out;
  out.solutions = FieldMatrix(A.cols, rhs.cols, A.p);
  out.ok.assign(rhs.cols, true);

  // Pivot rows whose pivot lands in the rhs block witness inconsistency of
  // that rhs column; rows past the A-part rank decide feasibility.
  std::size_t a_rank = 0;
  for (std::size_t r = 0; r < rf.rank; ++r)
    if (rf.pivots[r] < A.cols) ++a_rank;

  for (std::size_t j = 0; j < rhs.cols; ++j) {
    for (std::size_t r = a_rank; r < A.rows; ++r) {
      if (rf.rref.at(r, A.cols + j) != 0) {
        out.ok[j] = false;
        break;
      }
    }
    if (!out.ok[j]) continue;
    for (std::size_t r = 0; r < a_rank; ++r)
      out.solutions.at(rf.pivots[r], j) = rf.rref.at(r, A.cols + j);
  }
  return out;
}

std::optional<std::vector<Scalar>> solve_membership(const Subspace& S,
                                                    const std::vector<Scalar>& v) {
  if (v.size() != S.ambient_dim)
    throw std::invalid_argument("solve_membership: ambient dimension mismatch");
  FieldMatrix rhs(S.ambient_dim, 1, S.p);
  for (std::size_t i = 0; i < v.size(); ++i) rhs.at(i, 0) = v[i];
  SolveResult res = solve_many(S.basis_matrix(), rhs);
  if (!res.ok[0]) return std::nullopt;
  return res.solutions.column(0);
}

bool contains(const Subspace& S, const std::vector<Scalar>& v) {
  return solve_membership(S, v).has_value();
}

Subspace intersect(const Subspace& S1, const Subspace& S2) {
  if (S1.ambient_dim != S2.ambient_dim || S1.p != S2.p)
    throw std::invalid_argument("intersect: ambient dimension or field mismatch");
  const std::size_t d1 = S1.dim(), d2 = S2.dim();
  FieldMatrix stacked(S1.ambient_dim, d1 + d2, S1.p);
  for (std::size_t j = 0; j < d1; ++j)
    for (std::size_t i = 0; i < S1.ambient_dim; ++i) stacked.at(i, j) = S1.basis[j][i];
  for (std::size_t j = 0; j < d2; ++j)
    for (std::size_t i = 0; i < S1.ambient_dim; ++i)
      stacked.at(i, d1 + j) = fp_neg(S2.basis[j][i], S1.p);

  Subspace ker = kernel_basis(stacked);
  Subspace out(S1.ambient_dim, S1.p);
  for (const auto& xy : ker.basis) {
    std::vector<Scalar> w(S1.ambient_dim, 0);
    for (std::size_t j = 0; j < d1; ++j) {
      if (xy[j] == 0) continue;
      for (std::size_t i = 0; i < S1.ambient_dim; ++i)
        w[i] = fp_add(w[i], fp_mul(xy[j], S1.basis[j][i], S1.p), S1.p);
    }
    out.basis.push_back(std::move(w));
  }
  return out;
}

AdaptedBasis adapted_basis(const std::vector<Subspace>& chain) {
  AdaptedBasis out;
  if (chain.empty()) return out;
  const std::size_t ambient = chain.front().ambient_dim;
  const Scalar p = chain.front().p;

  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (chain[i].ambient_dim != ambient || chain[i + 1].ambient_dim != ambient)
      throw std::invalid_argument("adapted_basis: ambient dimension mismatch");
    for (const auto& v : chain[i].basis)
      if (!contains(chain[i + 1], v))
        throw std::invalid_argument("adapted_basis: nesting violated at level " +
                                    std::to_string(i + 1));
  }

  Subspace current(ambient, p);
  for (std::size_t level = 0; level < chain.size(); ++level) {
    for (const auto& v : chain[level].basis) {
      if (current.dim() > 0 && contains(current, v)) continue;
      if (current.dim() == 0) {
        bool zero = std::all_of(v.begin(), v.end(), [](Scalar x) { return x == 0; });
        if (zero) continue;
      }
      current.basis.push_back(v);
      out.vectors.push_back(v);
      out.levels.push_back(level + 1);
    }
  }
  return out;
}

}  // namespace topofilt
