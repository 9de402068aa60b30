#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "duval/quartic.hpp"

namespace duval {

inline std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw GeometryError("cannot read " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Polynomial read_polynomial(const std::filesystem::path& p) { return parse(read_text(p)); }

// (x0:x1:x2:x3) -> (x0 : (x2+x3)/8 : i(x2-x3)/8 : x1)
inline Images kato_naruki_change() {
  GR eighth(make_rational(1, 8));
  Images im = identity_images();
  im[1] = eighth * (x(2) + x(3));
  im[2] = (GR::i() * eighth) * (x(2) - x(3));
  im[3] = x(1);
  return im;
}

struct A19Fixture {
  Polynomial original;  // Kato-Naruki affine equation
  Polynomial affine;    // the same surface after the coordinate change
  NormalizedQuartic quartic;
};

inline A19Fixture load_a19(const std::filesystem::path& dir) {
  A19Fixture f;
  f.original = read_polynomial(dir / "kato_naruki_original.txt");
  f.affine = read_polynomial(dir / "a19_affine.txt");
  f.quartic = normalize_at_point(as_projective_quartic(f.affine));
  return f;
}

}  // namespace duval
