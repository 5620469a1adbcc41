#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <random>

#include "topofilt/field.hpp"

using namespace topofilt;

namespace {

FieldMatrix mat(std::size_t r, std::size_t c, Scalar p,
                std::initializer_list<Scalar> entries) {
  FieldMatrix M(r, c, p);
  std::size_t i = 0;
  for (Scalar v : entries) M.a[i++] = v % p;
  REQUIRE(i == r * c);
  return M;
}

Subspace span_of(std::size_t ambient, Scalar p,
                 std::initializer_list<std::vector<Scalar>> vecs) {
  Subspace S(ambient, p);
  for (const auto& v : vecs) S.basis.push_back(v);
  return S;
}

}  // namespace

TEST_CASE("modular arithmetic and inverses") {
  CHECK(fp_add(3, 4, 5) == 2);
  CHECK(fp_sub(1, 3, 5) == 3);
  CHECK(fp_neg(0, 7) == 0);
  for (Scalar p : {2u, 3u, 5u, 7u, 13u})
    for (Scalar a = 1; a < p; ++a) CHECK(fp_mul(a, fp_inv(a, p), p) == 1);
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
}

TEST_CASE("row reduction: rank and pivots") {
  auto I = FieldMatrix::identity(2, 2);
  auto ri = reduce(I);
  CHECK(ri.rank == 2);
  CHECK(ri.pivots == std::vector<std::size_t>{0, 1});

  auto ones = mat(2, 2, 2, {1, 1, 1, 1});
  auto ro = reduce(ones);
  CHECK(ro.rank == 1);
  CHECK(ro.pivots == std::vector<std::size_t>{0});

  FieldMatrix Z(3, 3, 2);
  auto rz = reduce(Z);
  CHECK(rz.rank == 0);
  CHECK(rz.pivots.empty());
}

TEST_CASE("kernel and image bases") {
  auto ones = mat(2, 2, 2, {1, 1, 1, 1});
  auto ker = kernel_basis(ones);
  REQUIRE(ker.dim() == 1);
  CHECK(ker.basis[0] == std::vector<Scalar>{1, 1});

  CHECK(kernel_basis(FieldMatrix::identity(2, 2)).dim() == 0);
  CHECK(kernel_basis(FieldMatrix(2, 2, 2)).dim() == 2);

  CHECK(image_basis(FieldMatrix::identity(2, 2)).dim() == 2);
  auto im = image_basis(ones);
  REQUIRE(im.dim() == 1);
  CHECK(im.basis[0] == std::vector<Scalar>{1, 1});
  CHECK(image_basis(FieldMatrix(3, 2, 2)).dim() == 0);
}

TEST_CASE("membership coordinates") {
  auto S = span_of(2, 2, {{1, 1}});
  auto zero = solve_membership(S, {0, 0});
  REQUIRE(zero);
  CHECK(*zero == std::vector<Scalar>{0});
  auto hit = solve_membership(S, {1, 1});
  REQUIRE(hit);
  CHECK(*hit == std::vector<Scalar>{1});
  CHECK_FALSE(solve_membership(S, {1, 0}));
  CHECK_THROWS_AS((void)solve_membership(S, {1, 0, 0}), std::invalid_argument);
}

TEST_CASE("subspace intersection") {
  auto S = span_of(2, 2, {{1, 1}});
  CHECK(intersect(S, S).dim() == 1);
  auto ex = span_of(2, 2, {{1, 0}});
  auto ey = span_of(2, 2, {{0, 1}});
  CHECK(intersect(ex, ey).dim() == 0);
  auto full = Subspace::full(2, 2);
  auto diag = intersect(full, S);
  REQUIRE(diag.dim() == 1);
  CHECK(contains(diag, {1, 1}));
  CHECK_THROWS_AS((void)intersect(S, Subspace::full(3, 2)), std::invalid_argument);
}

TEST_CASE("adapted bases along nested chains") {
  auto S = span_of(2, 2, {{1, 1}});
  auto single = adapted_basis({S});
  REQUIRE(single.vectors.size() == 1);
  CHECK(single.levels == std::vector<std::size_t>{1});

  auto chain = adapted_basis({Subspace(2, 2), S, Subspace::full(2, 2)});
  REQUIRE(chain.vectors.size() == 2);
  CHECK(chain.vectors[0] == std::vector<Scalar>{1, 1});
  CHECK(chain.levels == std::vector<std::size_t>{2, 3});
  CHECK_FALSE(contains(S, chain.vectors[1]));

  auto equal_chain = adapted_basis({S, S, S});
  CHECK(equal_chain.levels == std::vector<std::size_t>{1});

  // Not nested: the full plane does not sit inside the diagonal line.
  CHECK_THROWS_AS((void)adapted_basis({Subspace::full(2, 2), S}),
                  std::invalid_argument);
}

TEST_CASE("randomized linear algebra invariants") {
  std::mt19937 rng(42);
  for (Scalar p : {2u, 5u}) {
    std::uniform_int_distribution<std::size_t> size_d(1, 12);
    std::uniform_int_distribution<Scalar> entry(0, p - 1);
    for (int trial = 0; trial < 60; ++trial) {
      FieldMatrix M(size_d(rng), size_d(rng), p);
      for (auto& v : M.a) v = entry(rng);

      auto ker = kernel_basis(M);
      CHECK(rank_of(M) + ker.dim() == M.cols);
      for (const auto& x : ker.basis) {
        auto y = apply_matrix(M, x);
        CHECK(std::all_of(y.begin(), y.end(), [](Scalar v) { return v == 0; }));
      }

      Subspace cols(M.rows, p);
      auto im = image_basis(M);
      for (const auto& v : im.basis) {
        FieldMatrix rhs(M.rows, 1, p);
        for (std::size_t i = 0; i < M.rows; ++i) rhs.at(i, 0) = v[i];
        CHECK(solve_many(M, rhs).ok[0]);
      }

      FieldMatrix N(M.rows, size_d(rng), p);
      for (auto& v : N.a) v = entry(rng);
      auto A = image_basis(M), B = image_basis(N);
      auto AB = intersect(A, B), BA = intersect(B, A);
      CHECK(AB.dim() == BA.dim());
      for (const auto& v : AB.basis) CHECK(contains(BA, v));

      FieldMatrix joined(M.rows, A.dim() + B.dim(), p);
      for (std::size_t j = 0; j < A.dim(); ++j)
        for (std::size_t i = 0; i < M.rows; ++i) joined.at(i, j) = A.basis[j][i];
      for (std::size_t j = 0; j < B.dim(); ++j)
        for (std::size_t i = 0; i < M.rows; ++i)
          joined.at(i, A.dim() + j) = B.basis[j][i];
      CHECK(AB.dim() == A.dim() + B.dim() - rank_of(joined));
    }
  }
}
