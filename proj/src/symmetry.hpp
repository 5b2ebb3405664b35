#pragma once

#include "gaplab/graph.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace gaplab::detail {

// Colour refinement started from vertex degrees. Cell indices are derived from
// sorted signatures, so isomorphic graphs get corresponding cells.
std::vector<std::size_t> refine_partition(const Graph& g);

// Orbits of the automorphism group, each sorted, ordered by smallest member.
// Two vertices are merged only after an explicit automorphism mapping one to
// the other has been found; a pair whose search exceeds `node_limit` stays
// split, so the result may be finer than the true orbit partition, never coarser.
std::vector<std::vector<Vertex>> automorphism_orbits(const Graph& g,
                                                     std::size_t node_limit = 200000);

// Canonical form: equal for two graphs iff they are isomorphic. Enumerates
// cell-respecting orderings, so intended for small graphs (n <= 10).
std::string canonical_code(const Graph& g);

// Cheap isomorphism invariant: sorted degree sequence and sorted per-vertex
// triangle counts.
std::string degree_triangle_key(const Graph& g);

} // namespace gaplab::detail
