#pragma once

#include "dedekind/error.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dedekind {

// Planar diagram code. Each crossing lists four arc labels counterclockwise
// starting from the incoming under-strand, so the under-strand runs i -> k.
// A crossing is positive when the over-strand runs l -> j.
struct PDCode {
  std::string name;
  std::vector<std::array<long, 4>> crossings;
  std::vector<int> signs;
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t components = 1;

  std::size_t size() const noexcept { return crossings.size(); }
};

// Validates the labels, derives crossing signs from the orientation implied
// by the under-strands and checks them against `signs` where both exist.
// Throws MalformedPD.
PDCode make_pd(std::vector<std::array<long, 4>> crossings, std::optional<std::vector<int>> signs = std::nullopt,
               std::string name = {});

struct ResolutionVertex {
  // Circles as sorted arc lists, ordered by smallest arc. The 0-crossing
  // diagram has one circle with no arcs.
  std::vector<std::vector<long>> circles;
  std::map<long, std::size_t> circle_of_arc;
};

struct ResolutionEdge {
  std::size_t source = 0;
  std::size_t target = 0;
  std::size_t coordinate = 0;
  int sign = 1;
  bool merge = false;
  // merge: target circle of each source circle; split: source circle of each target circle.
  std::vector<std::size_t> circle_map;
};

// Vertices are indexed by bit masks: bit c is the smoothing at crossing c.
// The 0-smoothing joins (i, j) and (k, l); the 1-smoothing joins (i, l) and (j, k).
struct ResolutionCube {
  std::size_t crossings = 0;
  std::vector<ResolutionVertex> vertices;
  std::vector<ResolutionEdge> edges;
};

ResolutionCube resolve(const PDCode& pd);

}  // namespace dedekind
