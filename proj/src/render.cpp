#include <array>
#include <cmath>
#include <complex>
#include <fstream>
#include <vector>

#include "qfbend/errors.hpp"
#include "qfbend/lab.hpp"

namespace qfb::lab {

namespace {

using h3::MoebiusMap;
using h3::SpherePoint;

struct WordWalker {
  std::array<MoebiusMap, 4> gens;       // A, B, A^-1, B^-1, fixed order
  std::array<SpherePoint, 4> seeds;     // generator fixed points
  int max_depth;
  double epsilon;
  std::vector<std::complex<double>>* sink;
  const WindowRect* window;

  double seed_diameter(const MoebiusMap& m) const {
    std::array<SpherePoint, 4> img;
    for (int i = 0; i < 4; ++i) img[i] = m(seeds[i]);
    double diam = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) diam = std::max(diam, h3::chordal(img[i], img[j]));
    return diam;
  }

  void record(const MoebiusMap& m) const {
    SpherePoint p = h3::attracting_fixed_point(m);
    if (p.at_infinity) return;
    if (p.z.real() < window->re_min || p.z.real() > window->re_max ||
        p.z.imag() < window->im_min || p.z.imag() > window->im_max)
      return;
    sink->push_back(p.z);
  }

  void walk(const MoebiusMap& m, int last, int depth) const {
    static constexpr int kInverseOf[4] = {2, 3, 0, 1};
    for (int i = 0; i < 4; ++i) {
      if (last >= 0 && i == kInverseOf[last]) continue;  // reduced words only
      MoebiusMap next = m * gens[i];
      record(next);
      if (depth + 1 < max_depth && seed_diameter(next) > epsilon)
        walk(next, i, depth + 1);
    }
  }
};

}  // namespace

std::vector<std::complex<double>> enumerate_limit_points(const ptorus::MarkedGroup& g,
                                                         const ImageSpec& spec) {
  if (spec.max_depth < 1) fail("InsufficientPoints", "max_depth must be at least 1");
  if (!(spec.epsilon > 0.0)) fail("NonPositiveData", "epsilon must be positive");
  std::vector<std::complex<double>> points;
  WordWalker walker{
      {g.A, g.B, g.A.inverse(), g.B.inverse()},
      {h3::attracting_fixed_point(g.A), h3::attracting_fixed_point(g.A.inverse()),
       h3::attracting_fixed_point(g.B), h3::attracting_fixed_point(g.B.inverse())},
      spec.max_depth,
      spec.epsilon,
      &points,
      &spec.window};
  walker.walk(MoebiusMap::identity(), -1, 0);
  return points;
}

void render_limit_set(const ptorus::MarkedGroup& g, const ImageSpec& spec,
                      const std::string& path) {
  if (spec.width < 1 || spec.height < 1)
    fail("NonPositiveData", "image dimensions must be positive");
  if (!(spec.window.re_max > spec.window.re_min) ||
      !(spec.window.im_max > spec.window.im_min))
    fail("NonPositiveData", "window must have positive extent");

  std::vector<std::complex<double>> points = enumerate_limit_points(g, spec);
  if (points.empty()) fail("EmptyWindow", "no limit points inside the window");

  std::vector<unsigned char> pixels(static_cast<std::size_t>(spec.width) * spec.height,
                                    255);
  double re_span = spec.window.re_max - spec.window.re_min;
  double im_span = spec.window.im_max - spec.window.im_min;
  for (const std::complex<double>& z : points) {
    int col = static_cast<int>((z.real() - spec.window.re_min) / re_span * spec.width);
    int row = static_cast<int>((spec.window.im_max - z.imag()) / im_span * spec.height);
    col = std::min(col, spec.width - 1);
    row = std::min(row, spec.height - 1);
    pixels[static_cast<std::size_t>(row) * spec.width + col] = 0;
  }

  std::ofstream out(path, std::ios::binary);
  if (!out) fail("IoError", "cannot open " + path + " for writing");
  out << "P6\n" << spec.width << " " << spec.height << "\n255\n";
  for (unsigned char v : pixels) {
    char rgb[3] = {static_cast<char>(v), static_cast<char>(v), static_cast<char>(v)};
    out.write(rgb, 3);
  }
  out.flush();
  if (!out) fail("IoError", "failed while writing " + path);
}

}  // namespace qfb::lab
