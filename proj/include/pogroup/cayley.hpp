#pragma once

#include <cstddef>
#include <string>

#include "pogroup/group.hpp"

namespace pogroup {

// Ball of the Cayley graph: vertices with word length <= radius over the
// given generators (inverses are always used for adjacency). Vertices are
// sorted by canonical normal form; adjacency is implicit via multiplication
// plus binary search.
struct CayleyBall {
  GroupRef group;
  std::vector<Element> gens;  // as supplied, without formal inverses
  int radius = 0;
  std::vector<Element> vertices;  // sorted by elem_cmp
  std::vector<int> dist;          // parallel to vertices

  std::ptrdiff_t find(const Element& e) const;  // -1 if absent
  size_t size() const { return vertices.size(); }
};

CayleyBall cayley_ball(const GroupRef& g, const std::vector<Element>& gens, int radius,
                       size_t max_vertices = 4000000);

// Default generating set: the presentation generators.
std::vector<Element> default_gens(const GroupRef& g);

// Deterministic binary ball cache, keyed by group hash, generator set and
// radius. dir empty = disabled. Layout documented in docs/ball-cache.md.
CayleyBall cayley_ball_cached(const GroupRef& g, const std::vector<Element>& gens, int radius,
                              const std::string& cache_dir, size_t max_vertices = 4000000);

std::uint64_t gens_hash(const std::vector<Element>& gens);

}  // namespace pogroup
