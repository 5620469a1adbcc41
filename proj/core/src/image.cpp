#include "topofilt/image.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <set>
#include <stdexcept>

namespace topofilt {

int GrayscaleImage::min_level() const {
  if (levels.empty()) throw std::invalid_argument("min_level: empty image");
  return *std::min_element(levels.begin(), levels.end());
}

int GrayscaleImage::max_level() const {
  if (levels.empty()) throw std::invalid_argument("max_level: empty image");
  return *std::max_element(levels.begin(), levels.end());
}

namespace {

// Reads the next header token, skipping whitespace and '#' comments.
std::string pgm_token(std::istream& in) {
  std::string tok;
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {
      }
      continue;
    }
    if (std::isspace(c)) {
      if (!tok.empty()) break;
      continue;
    }
    tok.push_back(static_cast<char>(c));
  }
  if (tok.empty()) throw std::runtime_error("read_pgm: truncated header");
  return tok;
}

}  // namespace

GrayscaleImage read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_pgm: cannot open " + path);
  return read_pgm(in);
}

GrayscaleImage read_pgm(std::istream& in) {
  std::string magic = pgm_token(in);
  if (magic != "P2" && magic != "P5")
    throw std::runtime_error("read_pgm: unsupported magic " + magic);
  long w = std::stol(pgm_token(in));
  long h = std::stol(pgm_token(in));
  long maxval = std::stol(pgm_token(in));
  if (w <= 0 || h <= 0 || maxval <= 0 || maxval > 65535)
    throw std::runtime_error("read_pgm: invalid header");

  GrayscaleImage img;
  img.width = static_cast<std::size_t>(w);
  img.height = static_cast<std::size_t>(h);
  img.levels.resize(img.width * img.height);

  if (magic == "P2") {
    for (auto& v : img.levels) {
      long x = std::stol(pgm_token(in));
      if (x < 0 || x > maxval) throw std::runtime_error("read_pgm: sample out of range");
      v = static_cast<int>(x);
    }
  } else {
    // pgm_token consumed the single whitespace after maxval; the raster
    // starts here.
    const bool wide = maxval > 255;
    for (auto& v : img.levels) {
      int hi = in.get();
      if (hi == EOF) throw std::runtime_error("read_pgm: truncated raster");
      if (wide) {
        int lo = in.get();
        if (lo == EOF) throw std::runtime_error("read_pgm: truncated raster");
        v = (hi << 8) | lo;  // big-endian per the PGM standard
      } else {
        v = hi;
      }
      if (v > maxval) throw std::runtime_error("read_pgm: sample out of range");
    }
  }
  return img;
}

namespace {

std::string vertex_id(std::size_t r, std::size_t c) {
  return "v:" + std::to_string(r) + "," + std::to_string(c);
}
std::string hedge_id(std::size_t r, std::size_t c) {  // (r,c) -> (r,c+1)
  return "eh:" + std::to_string(r) + "," + std::to_string(c);
}
std::string vedge_id(std::size_t r, std::size_t c) {  // (r,c) -> (r+1,c)
  return "ev:" + std::to_string(r) + "," + std::to_string(c);
}
std::string square_id(std::size_t r, std::size_t c) {
  return "sq:" + std::to_string(r) + "," + std::to_string(c);
}

void add_pixel(CellComplex& K, std::size_t r, std::size_t c, Scalar p) {
  const Scalar neg1 = fp_neg(1, p);
  for (std::size_t dr = 0; dr < 2; ++dr)
    for (std::size_t dc = 0; dc < 2; ++dc) {
      std::string vid = vertex_id(r + dr, c + dc);
      if (!K.has_cell(vid)) K.add_cell({vid, 0, {}});
    }
  auto add_edge = [&](const std::string& id, const std::string& from,
                      const std::string& to) {
    if (!K.has_cell(id)) K.add_cell({id, 1, {{to, 1}, {from, neg1}}});
  };
  add_edge(hedge_id(r, c), vertex_id(r, c), vertex_id(r, c + 1));
  add_edge(hedge_id(r + 1, c), vertex_id(r + 1, c), vertex_id(r + 1, c + 1));
  add_edge(vedge_id(r, c), vertex_id(r, c), vertex_id(r + 1, c));
  add_edge(vedge_id(r, c + 1), vertex_id(r, c + 1), vertex_id(r + 1, c + 1));
  // d(square) = top + right - bottom - left, which squares to zero.
  K.add_cell({square_id(r, c),
              2,
              {{hedge_id(r, c), 1},
               {vedge_id(r, c + 1), 1},
               {hedge_id(r + 1, c), neg1},
               {vedge_id(r, c), neg1}}});
}

}  // namespace

CellComplex binary_cubical(const GrayscaleImage& img, int r, Scalar field) {
  CellComplex K(field);
  for (std::size_t row = 0; row < img.height; ++row)
    for (std::size_t col = 0; col < img.width; ++col)
      if (img.at(row, col) < r) add_pixel(K, row, col, field);
  return K;
}

Filtration threshold_filtration(const GrayscaleImage& img,
                                const std::vector<int>& thresholds, Scalar field) {
  if (thresholds.empty())
    throw std::invalid_argument("threshold_filtration: empty threshold list");
  for (std::size_t i = 0; i + 1 < thresholds.size(); ++i)
    if (!(thresholds[i] < thresholds[i + 1]))
      throw std::invalid_argument("threshold_filtration: thresholds not increasing");
  Filtration F;
  for (int t : thresholds) {
    F.steps.push_back(binary_cubical(img, t, field));
    F.param_values.push_back(static_cast<double>(t));
  }
  return F;
}

std::vector<int> default_thresholds(const GrayscaleImage& img) {
  std::set<int> distinct(img.levels.begin(), img.levels.end());
  std::vector<int> out;
  for (int v : distinct) out.push_back(v + 1);
  return out;
}

double sup_norm_diff(const GrayscaleImage& f, const GrayscaleImage& g) {
  if (f.width != g.width || f.height != g.height)
    throw std::invalid_argument("sup_norm_diff: image sizes differ");
  double m = 0;
  for (std::size_t i = 0; i < f.levels.size(); ++i)
    m = std::max(m, std::abs(static_cast<double>(f.levels[i]) - g.levels[i]));
  return m;
}

}  // namespace topofilt
