#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gp/errors.hpp"
#include "gp/poly.hpp"

namespace gp {

enum class Color : unsigned char { b, w };
enum class Attr : unsigned char { d, l };

Color flipped(Color c);
Attr flipped(Attr a);

struct Chrom {
  int index = 0;
  Attr attr = Attr::d;
  bool operator==(const Chrom&) const = default;
};

struct Edge {
  int id = 0;
  int u = 0;
  int v = 0;
  std::optional<Color> color;
  std::optional<int> sign;  // +1 or -1
  std::optional<Chrom> chrom;
  bool special = false;  // pattern-basis edge marker ("etype":"s" in JSON)

  bool is_loop() const { return u == v; }
  int other(int vertex) const { return vertex == u ? v : u; }
};

// One half of an edge: end 0 sits at u, end 1 at v.
struct EndRef {
  int edge = 0;
  int end = 0;
  bool operator==(const EndRef&) const = default;
};

using Rotation = std::vector<std::vector<EndRef>>;

// Multigraph with loops, optional per-edge decorations and an optional
// rotation system (counterclockwise edge-end order around each vertex).
struct DecoratedGraph {
  int vertex_count = 0;
  std::vector<Edge> edges;
  std::optional<Rotation> rotation;

  const Edge& edge_by_id(int id) const;
  Edge& edge_by_id(int id);
  bool has_edge(int id) const;
  int fresh_edge_id() const;

  // Structural soundness: endpoint ranges, unique ids, rotation covering
  // every edge-end exactly once, per-component Euler count V-E+F=2.
  void validate() const;

  std::string to_json_string() const;
  static DecoratedGraph from_json_string(const std::string& text);
};

struct StructureReport {
  int p0 = 0;  // connected components
  int p1 = 0;  // cyclomatic number |E| - |V| + p0
  std::vector<int> loop_ids;
  std::vector<int> isthmus_ids;
  std::vector<std::vector<int>> blocks;  // edge ids; each loop is its own block
  bool is_2connected = false;
};

StructureReport structure(const DecoratedGraph& g);

enum class EditKind { del, contract, contract_free, recolor, resign, reattribute };

// delete: removes e. contract: removes e and merges its endpoints (loops
// rejected). contract_free: contract, except a loop is removed and one
// isolated vertex is added. recolor/resign/reattribute flip the decoration.
// Embeddings survive delete/contract (rotation splice at the merged vertex).
DecoratedGraph edit(const DecoratedGraph& g, int edge_id, EditKind kind);

enum class Survivor { deleted, contracted };

struct Lemma18Witness {
  Survivor survivor = Survivor::deleted;
  DecoratedGraph graph;
  StructureReport proof;
};

// For 2-connected g with >= 2 edges: whichever of g-e, g/e stays
// 2-connected (deletion preferred on a tie).
Lemma18Witness lemma18_witness(const DecoratedGraph& g, int edge_id);

struct SpanningTrees {
  Int count = 0;
  std::optional<std::vector<std::vector<int>>> trees;  // sorted edge-id sets
};

// Matrix-tree count; enumeration included while |E| <= enumerate_cap.
SpanningTrees spanning_trees(const DecoratedGraph& g, int enumerate_cap = 16);

// Isomorphism-invariant byte string over (vertices, edges, decorations);
// edge ids and rotation do not participate.
std::string canonical_code(const DecoratedGraph& g);

enum class DualMode { knot, chromatic };

struct FacesAndDual {
  // Each face is the cyclic sequence of directed edge ids along its
  // boundary walk (edge id, +1 forward u->v or -1 backward).
  std::vector<std::vector<std::pair<int, int>>> faces;
  DecoratedGraph dual;
};

// Geometric dual from the rotation system. Knot mode swaps edge colors
// b<->w and keeps signs; chromatic mode keeps colors and flips d<->l.
// Disconnected graphs dualize componentwise.
FacesAndDual faces_and_dual(const DecoratedGraph& g, DualMode mode = DualMode::knot);

DecoratedGraph two_vertex_product(const DecoratedGraph& g1, int v1, int w1,
                                  const DecoratedGraph& g2, int v2, int w2);
DecoratedGraph mutant(const DecoratedGraph& g1, int v1, int w1,
                      const DecoratedGraph& g2, int v2, int w2);

// True iff some cycle carries both colors; needs every edge colored.
bool bichromatic_cycle(const DecoratedGraph& g);

// Spanning subgraph on all vertices keeping edges of the given color.
DecoratedGraph color_subgraph(const DecoratedGraph& g, Color keep);
// Quotient by the other color: contracts every non-loop edge not of
// color `keep`, drops the contracted color's loops, keeps `keep` edges.
DecoratedGraph color_quotient(const DecoratedGraph& g, Color keep);

// Small constructors shared by tests and corpus generation.
DecoratedGraph make_edgeless(int n);
DecoratedGraph make_path(int edges);
DecoratedGraph make_cycle(int edges, bool with_rotation = false);
DecoratedGraph make_theta(int parallel_edges, bool with_rotation = false);
DecoratedGraph make_bouquet(int loops);
DecoratedGraph make_complete(int n);
DecoratedGraph relabeled(const DecoratedGraph& g, const std::vector<int>& vperm,
                         const std::vector<int>& edge_shuffle,
                         const std::map<int, int>& new_ids);

}  // namespace gp
