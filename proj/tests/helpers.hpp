#pragma once

// Shared builders for the test suite: small canonical complexes, the
// checked-in grayscale fixture, and random generators for property tests.

#include <random>
#include <string>

#include "topofilt/cloud.hpp"
#include "topofilt/complex.hpp"
#include "topofilt/image.hpp"

namespace testutil {

using namespace topofilt;

std::string fixture_path(const std::string& name);

GrayscaleImage fig1_image();
Filtration fig1_filtration(Scalar field = 2);

// Boundary circle of a unit square pixel (the square's 1-skeleton).
CellComplex skeleton(const CellComplex& K, int up_to_dim);
CellComplex filled_square(Scalar field = 2);
CellComplex circle4(Scalar field = 2);

// Random filtered 2-complex: a random simplicial complex on a few vertices
// with face-monotone step labels. Multiplicative signs are simplicial, so
// any prime field works.
Filtration random_filtration(std::mt19937& rng, std::size_t max_steps,
                             int max_vertices, Scalar field = 2);

// Growing family where no class ever dies before the appended zero: two
// vertices joined by one edge at step 1, one extra parallel edge per step.
Filtration monomorphic_filtration(std::mt19937& rng, std::size_t steps,
                                  Scalar field = 2);

// Same complex repeated s times.
Filtration constant_filtration(const CellComplex& K, std::size_t s);

// Side-by-side filtration with ids of G prefixed to keep them disjoint.
Filtration disjoint_union(const Filtration& F, const Filtration& G);

GrayscaleImage random_image(std::mt19937& rng, std::size_t w, std::size_t h,
                            int max_level);
PointCloud random_cloud(std::mt19937& rng, std::size_t n, double extent);

bool same_span(const Subspace& A, const Subspace& B);

}  // namespace testutil
