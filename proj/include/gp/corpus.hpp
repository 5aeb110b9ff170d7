#pragma once

#include <random>
#include <vector>

#include "gp/graph.hpp"

namespace gp {

// Every connected multigraph (loops allowed) with at most max_edges edges,
// one representative per isomorphism class, undecorated. Level-by-level
// growth: each connected graph with m+1 edges arises from one with m edges
// by adding an edge between existing vertices or attaching a new leaf.
std::vector<DecoratedGraph> all_connected_multigraphs(int max_edges);

// Random connected multigraph (loops and parallel edges allowed).
DecoratedGraph random_connected_multigraph(std::mt19937& rng, int edges, int max_vertices);

// Random loopless 2-connected plane multigraph with a valid rotation
// system: an embedded cycle plus face chords.
DecoratedGraph random_plane_2connected(std::mt19937& rng, int edges);

struct DecorationPlan {
  bool colors = false;
  bool signs = false;
  bool chrom = false;
  int chrom_indices = 1;  // chrom index drawn from [0, chrom_indices)
};

DecoratedGraph decorated(const DecoratedGraph& g, std::mt19937& rng, const DecorationPlan& plan);

}  // namespace gp
