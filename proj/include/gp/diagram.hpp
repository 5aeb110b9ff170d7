#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gp/graph.hpp"

namespace gp {

// PD quad: arc labels counterclockwise from the incoming under-strand.
// The under-strand runs slot 0 -> slot 2, the over-strand joins slots 1
// and 3, and a positive crossing carries the over-strand slot 3 -> slot 1.
struct Crossing {
  int id = 0;
  std::array<int, 4> arcs{};
};

// Link diagram: quad list plus crossing-free circles. Slot-0 entries fix a
// canonical direction for every component that passes under somewhere;
// dirs stores +1/-1 per component (ordered by least arc label) relative to
// that canonical direction. An empty dirs means all +1.
struct Diagram {
  std::vector<Crossing> crossings;
  int extra_circles = 0;
  bool oriented = true;
  std::vector<int> dirs;

  std::string to_json_string() const;
  static Diagram from_json_string(const std::string& text);
};

// Sources: a raw PD quad list; a braid closure (letter k > 0 is the
// positive generator sigma_k, 1 <= |k| < strands); a signed 2-colored
// plane graph (one crossing per edge, black faces holding the vertices).
Diagram ingest_pd(const std::vector<std::array<int, 4>>& quads);
Diagram ingest_braid(int strands, const std::vector<int>& word);
Diagram ingest_graph(const DecoratedGraph& g);
// JSON dispatcher: {"pd":[[a,b,c,d],...], "orient":[...]?, "circles":k?}
// | {"braid":{"strands":k,"word":[...]}} | {"graph":{...}}.
Diagram ingest(const std::string& json_text);

int crossing_count(const Diagram& d);
int component_count(const Diagram& d);
// Arcs of each component in effective walk order starting at the least
// arc label; components ordered by least arc label.
std::vector<std::vector<int>> component_arcs(const Diagram& d);
// Passages aligned with component_arcs: entry k of a component is the
// (crossing id, 'U' or 'O') arrival at the head of arc k.
std::vector<std::vector<std::pair<int, char>>> strand_passages(const Diagram& d);
std::vector<int> crossing_signs(const Diagram& d);  // per crossing, in order
int writhe(const Diagram& d);

// Necessary conditions for a signed 2-colored plane graph to describe a
// diagram: no b+ or w- isthmus, no b- or w+ loop, every vertex meets an
// even number of b+/w- edge-ends, every face an even number of b-/w+
// boundary passes.
struct GraphDiagramCheck {
  bool ok = true;
  std::vector<std::string> violations;
};
GraphDiagramCheck validate_graph(const DecoratedGraph& g);

// Checkerboard graph: one vertex per black face, one edge per crossing.
// An edge is colored b exactly when the A-smoothing merges its black
// corners; its sign is the crossing sign (left unset when unoriented).
// The two shadings are distinguished by the color of the face at the
// head of the least arc.
enum class Shading { black_left_of_reference, other };
DecoratedGraph to_graph(const Diagram& d,
                        Shading shading = Shading::black_left_of_reference);

struct KauffmanState {
  std::map<int, int> marker;  // crossing id -> +1 (A) or -1 (B)
};

struct ResolveReport {
  int circle_count = 0;
  std::map<int, bool> self_touch;  // both smoothing arcs on one circle
};
ResolveReport resolve(const Diagram& d, const KauffmanState& s);

// plus: no circle touches itself in the all-A state; minus dually.
// NotApplicable when some component has no crossing.
struct AdequacyReport {
  bool plus = false;
  bool minus = false;
  int s_plus_circles = 0;
  int s_minus_circles = 0;
};
AdequacyReport adequacy(const Diagram& d);

// Orientation-respecting smoothing of every crossing. d_plus/d_minus
// count circle pairs joined by a positive/negative crossing;
// simplified_tree_like = no pair mixes signs and the collapsed graph is
// a tree.
struct SeifertReport {
  int s = 0;
  DecoratedGraph seifert_graph;
  bool simplified_tree_like = false;
  int d_plus = 0;
  int d_minus = 0;
};
SeifertReport seifert(const Diagram& d);

// nugatory: a crossing two of whose opposite corners lie on one face
// (its checkerboard edge is a loop or an isthmus). prime: connected,
// >= 1 crossing, reduced, checkerboard graph 2-connected.
struct DiagramPredicates {
  bool connected = false;
  bool alternating = false;
  bool reduced = false;
  bool prime = false;
  std::vector<int> nugatory_ids;
};
DiagramPredicates predicates(const Diagram& d);

// b: longest cyclic run of over-passes along a strand. b_generalized:
// most distinct crossings first met as over-passes along a walk before
// one is first met as an under-pass.
struct BridgeReport {
  int b = 0;
  int b_generalized = 0;
};
BridgeReport bridges(const Diagram& d);

struct LinkingReport {
  std::vector<int> per_component;  // lk(L_i, L - L_i)
  int total = 0;                   // sum of lk over unordered pairs
  int sw = 0;                      // self-crossing sign sum
};
LinkingReport linking(const Diagram& d);

enum class DiagramTransform { mirror, reverse_component, reverse_all };
// mirror swaps over/under everywhere (component orientations kept);
// reversals flip component directions and need an oriented diagram.
Diagram transform(const Diagram& d, DiagramTransform kind, int component = 0);

// Kauffman smoothing of one crossing (marker +1 joins slots (0,1),(2,3)).
// keep_orientation demands the oriented smoothing (marker == sign).
Diagram smooth_crossing(const Diagram& d, int crossing_id, int marker,
                        bool keep_orientation = false);
// Over/under swap at one crossing; orientation survives.
Diagram switch_crossing(const Diagram& d, int crossing_id);

// The chosen component alone (index as in component_arcs, crossing-free
// circles last): self-crossings survive, crossings shared with erased
// components pass the kept strand straight through. The result keeps the
// component's direction; a crossing-free survivor becomes one circle.
Diagram component_diagram(const Diagram& d, int component);

}  // namespace gp
