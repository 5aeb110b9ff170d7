#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gp/graph.hpp"
#include "gp/poly.hpp"

namespace gp {

struct GraphPolyStats {
  long long expansions = 0;  // deletion-contraction splits performed
  long long cache_hits = 0;
};

struct GraphPolyOptions {
  bool memo = true;
  // Optional shared cache, keyed "kind:canonical_code[;weight signature]".
  std::map<std::string, MultiPoly>* cache = nullptr;
  GraphPolyStats* stats = nullptr;
};

// Tutte polynomial in x, y. Decorations ignored; memoized on canonical_code;
// multiplicative over blocks and disjoint sums.
MultiPoly tutte(const DecoratedGraph& g, const GraphPolyOptions& opt = {});

struct ActivityLeaf {
  std::vector<int> tree_edges;  // the spanning tree this leaf corresponds to
  int internal = 0;             // isthmuses in the terminal graph
  int external = 0;             // loops in the terminal graph
};

struct TutteActivities {
  MultiPoly poly;
  std::vector<ActivityLeaf> leaves;
};

// Binary computational tree that follows edge_order, never splitting on a
// loop or isthmus; each terminal graph contributes x^#isthmus y^#loops and
// corresponds to exactly one spanning tree.
TutteActivities tutte_activities(const DecoratedGraph& g,
                                 const std::vector<int>& edge_order);

enum class BracketMode { state_sum, recursion };

// Graph Kauffman bracket in mu, A, B. The spanning-subgraph state sum is
// the authoritative path; recursion mode recomputes via
// <G> = B<G-e> + A<G//e> with <n isolated vertices> = mu^(n-1).
MultiPoly graph_bracket(const DecoratedGraph& g,
                        BracketMode mode = BracketMode::state_sum);

// Chromatic polynomial in lambda: (-1)^(|V|-p0) lambda^p0 tutte(1-lambda, 0).
MultiPoly chromatic(const DecoratedGraph& g, const GraphPolyOptions& opt = {});

// Variable names for the dichromatic polynomial; color index i defaults to
// the pair ("A<i>", "B<i>").
struct ChromaticWeights {
  std::string mu = "mu";
  std::string r1 = "r1";
  std::string r2 = "r2";
  std::map<int, std::pair<std::string, std::string>> names;

  std::string a_name(int index) const;
  std::string b_name(int index) const;
  std::string signature() const;  // stable cache-key fragment
};

enum class RMode { state_sum, recursion };

// Dichromatic R(G; mu, r1, r2, A_i, B_i). Every edge needs a chromatic
// decoration; the graph needs at least one vertex. State sum is the
// authoritative path, recursion mode re-derives by the two reduction rules.
MultiPoly dichromatic_R(const DecoratedGraph& g, const ChromaticWeights& w = {},
                        RMode mode = RMode::state_sum);

// Traldi's weighted dichromatic Q(G; t, z): substitute r1 = mu = t, r2 = z
// into t*R(G) and divide exactly by B_i per dark edge, A_i per light edge.
MultiPoly traldi_Q(const DecoratedGraph& g, const ChromaticWeights& w = {});

// Edge weight w(e) = A_i/B_i for a dark edge, B_i/A_i for a light one.
MultiPoly traldi_weight(const Edge& e, const ChromaticWeights& w = {});

}  // namespace gp
