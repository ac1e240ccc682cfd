#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <vector>

#include "bmparity/gauss_code.hpp"
#include "bmparity/integer.hpp"

namespace bmparity {

// The 4-valent ribbon graph of a Gauss code. Edge e runs from pass e to pass
// e+1 (cyclically); dart 2e is its tail and dart 2e+1 its head. Vertex v is
// the crossing crossings[v], with its four darts in counterclockwise order.
struct RotationSystem {
  std::vector<int> crossings;
  std::vector<std::array<std::size_t, 4>> rotation;
  std::vector<std::size_t> vertex_of_dart;
  std::vector<std::vector<std::size_t>> faces;  // dart cycles of the capped surface

  std::size_t vertex_count() const { return crossings.size(); }
  std::size_t edge_count() const { return vertex_of_dart.size() / 2; }
  std::size_t face_count() const { return faces.size(); }
  // Euler characteristic V - E + F.
  long euler_characteristic() const;
  std::size_t genus() const;

  std::size_t rot_next(std::size_t dart) const;
};

RotationSystem carter_surface(const GaussCode& code);

// First homology of the capped surface. An edge cycle (one coefficient per
// edge) maps to coordinates on a basis of rank 2g; `loop_form` is the
// intersection pairing on non-tree edges, which descends to homology.
struct HomologyForm {
  std::size_t rank = 0;
  IntMatrix intersection;  // rank x rank, on the chosen basis
  std::vector<std::size_t> non_tree_edges;
  IntMatrix loop_form;     // on non_tree_edges
  IntMatrix to_basis;      // loop coordinates -> basis coordinates, |non_tree| x rank
  IntMatrix face_relations;

  IntVector loop_vector(const IntVector& edge_cycle) const;
  IntVector class_of(const IntVector& edge_cycle) const;
  Integer intersect(const IntVector& cycle1, const IntVector& cycle2) const;
};

// Throws std::logic_error if the presentation is not free of rank 2g.
HomologyForm homology_form(const RotationSystem& surface);

struct HalfClasses {
  std::map<int, IntVector> left_half;   // edge cycles by crossing id
  std::map<int, IntVector> right_half;
  IntVector whole;                      // [D] as an edge cycle
};

// D^l_c starts at the pass of c whose strand comes first in the positive
// frame at c and runs forward to the other pass; D^r_c is the rest.
HalfClasses half_classes(const GaussCode& code);

}  // namespace bmparity
