#pragma once

// Reference computations used only by the tests. They avoid the library's
// normal forms and tensor machinery so that agreement means something.

#include "dedekind/frobenius_algebra.hpp"
#include "dedekind/pd_code.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

using dedekind::Integer;
using dedekind::Rational;

// x + y sqrt d in the lattice with rows (a, 0), (b, c).
bool in_hnf_lattice(const Integer& a, const Integer& b, const Integer& c, const Integer& x, const Integer& y);

// Element of norm a*c inside the ideal, searched over the full box the norm allows.
std::optional<std::pair<Integer, Integer>> principal_generator(const dedekind::Ideal& ideal);

// mu^2 = (z) via products of basis elements divisible by z and N(mu)^2 = |N(z)|.
bool square_is_principal(const dedekind::Ideal& mu, const dedekind::RingElement& z);

// Q-basis (columns, interleaved re/im) of the lattice sum over words of mu^{#X}
// inside K^{2^n}.
dedekind::RatMatrix tensor_power_lattice(const dedekind::FrobeniusData& data, std::size_t n);

// Lattice equality of two square full-rank column bases.
bool same_lattice(const dedekind::RatMatrix& a, const dedekind::RatMatrix& b);

// Faces of the planar 4-valent graph of a PD code.
std::size_t face_count(const std::vector<std::array<long, 4>>& crossings);

// K-dimensions of the cube complex per degree, built over K from scratch.
std::vector<std::size_t> k_homology(const dedekind::PDCode& pd, const dedekind::FrobeniusData& data);

// Rank of a matrix over K by Gauss-Jordan on field elements.
std::size_t k_rank(std::vector<std::vector<dedekind::FieldElement>> m);

}  // namespace oracle
