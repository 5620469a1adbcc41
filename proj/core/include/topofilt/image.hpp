#pragma once

// Grayscale images and their threshold filtrations of 2-D cubical
// complexes. A pixel with value < r contributes a closed square (2-cell
// with its 4 edges and 4 vertices) to the complex at threshold r.

#include <iosfwd>
#include <string>
#include <vector>

#include "topofilt/complex.hpp"

namespace topofilt {

struct GrayscaleImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<int> levels;  // row-major, height*width values

  int at(std::size_t row, std::size_t col) const { return levels[row * width + col]; }
  int& at(std::size_t row, std::size_t col) { return levels[row * width + col]; }
  int min_level() const;
  int max_level() const;
};

// P2 (ASCII) and P5 (binary) readers, 8- and 16-bit maxval.
GrayscaleImage read_pgm(const std::string& path);
GrayscaleImage read_pgm(std::istream& in);

CellComplex binary_cubical(const GrayscaleImage& img, int r, Scalar field = 2);

Filtration threshold_filtration(const GrayscaleImage& img,
                                const std::vector<int>& thresholds,
                                Scalar field = 2);

// Sorted distinct pixel values shifted by +1, so every distinct lower level
// set appears exactly once and the final step covers the whole image.
std::vector<int> default_thresholds(const GrayscaleImage& img);

double sup_norm_diff(const GrayscaleImage& f, const GrayscaleImage& g);

}  // namespace topofilt
