#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "polyrecip/fixtures.hpp"

namespace support {

using polyrecip::CellComplex;

struct NamedComplex {
  std::string name;
  CellComplex complex;
};

// Subdivided tetrahedra, stellar glued boxes and 2x2x1 box grids with
// randomized geometry, `per_family` of each.
inline std::vector<NamedComplex> generated(unsigned seed, int per_family) {
  namespace fx = polyrecip::fixtures;
  std::mt19937 rng(seed);
  std::vector<NamedComplex> out;
  for (int i = 0; i < per_family; ++i) {
    out.push_back({"subdivided-tetrahedron#" + std::to_string(i), fx::random_subdivided_tetrahedron(rng)});
    out.push_back({"stellar-glued-boxes#" + std::to_string(i), fx::random_stellar_glued_boxes(rng)});
    out.push_back({"box-grid-2x2x1#" + std::to_string(i), fx::random_box_grid(rng, 2, 2, 1)});
  }
  return out;
}

// Every solvable named fixture.
inline std::vector<NamedComplex> solvable_named() {
  namespace fx = polyrecip::fixtures;
  std::vector<NamedComplex> out;
  for (const char* name : {"tetra", "stellar-glued-boxes", "subdivided-tetrahedron", "subdivided-tetrahedron-interior",
                           "box-grid-2x2x1", "box-grid-4x4x3"}) {
    out.push_back({name, fx::named(name)});
  }
  return out;
}

}  // namespace support
