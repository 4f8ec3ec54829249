#pragma once

#include "polyjoin/graph.hpp"

#include <cstddef>
#include <span>

namespace polyjoin::fixtures {

Graph complete(std::size_t n);
Graph empty(std::size_t n);
Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph complete_multipartite(std::span<const std::size_t> parts);

/// Petersen graph: outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
Graph petersen();

/// Complement of the Petersen graph, isomorphic to the line graph of K5.
Graph petersen_complement();

/// Paley graph of order 9 on GF(9) = F3[i], i^2 = -1. Vertex a + b i has id 3a + b;
/// x ~ y iff x - y is a nonzero square.
Graph paley9();

}  // namespace polyjoin::fixtures
