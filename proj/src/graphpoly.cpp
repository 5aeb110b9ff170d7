#include "gp/graphpoly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "gp/errors.hpp"

namespace gp {

namespace {

DecoratedGraph stripped(const DecoratedGraph& g) {
  DecoratedGraph s;
  s.vertex_count = g.vertex_count;
  s.edges.reserve(g.edges.size());
  for (const Edge& e : g.edges) s.edges.push_back({e.id, e.u, e.v, {}, {}, {}, false});
  return s;
}

DecoratedGraph edge_subgraph(const DecoratedGraph& g, const std::vector<int>& ids) {
  DecoratedGraph b;
  std::map<int, int> vmap;
  for (int id : ids) {
    const Edge& e = g.edge_by_id(id);
    for (int v : {e.u, e.v})
      if (!vmap.count(v)) {
        int k = (int)vmap.size();
        vmap[v] = k;
      }
  }
  b.vertex_count = (int)vmap.size();
  for (int id : ids) {
    const Edge& e = g.edge_by_id(id);
    b.edges.push_back({e.id, vmap[e.u], vmap[e.v], e.color, e.sign, e.chrom, e.special});
  }
  return b;
}

struct TutteEngine {
  bool memo;
  std::map<std::string, MultiPoly>* external;
  GraphPolyStats* stats;
  std::map<std::string, MultiPoly> local;

  MultiPoly whole(const DecoratedGraph& g) {
    MultiPoly acc(1);
    for (const auto& blk : structure(g).blocks) acc *= block(edge_subgraph(g, blk));
    return acc;
  }

  MultiPoly block(const DecoratedGraph& b) {
    if (b.edges.size() == 1)
      return MultiPoly::var(b.edges[0].is_loop() ? "y" : "x");
    std::string key;
    if (memo) {
      key = "tutte:" + canonical_code(b);
      if (auto it = local.find(key); it != local.end()) {
        if (stats) stats->cache_hits++;
        return it->second;
      }
      if (external)
        if (auto it = external->find(key); it != external->end()) {
          if (stats) stats->cache_hits++;
          return it->second;
        }
    }
    if (stats) stats->expansions++;
    // pivot: highest multiplicity collapses parallel classes fastest
    int pick = -1, best = -1;
    for (const Edge& e : b.edges) {
      int mult = 0;
      for (const Edge& f : b.edges)
        if ((f.u == e.u && f.v == e.v) || (f.u == e.v && f.v == e.u)) ++mult;
      if (mult > best) {
        best = mult;
        pick = e.id;
      }
    }
    MultiPoly res =
        whole(edit(b, pick, EditKind::del)) + whole(edit(b, pick, EditKind::contract));
    if (memo) {
      local.emplace(key, res);
      if (external) external->emplace(key, res);
    }
    return res;
  }
};

}  // namespace

MultiPoly tutte(const DecoratedGraph& g, const GraphPolyOptions& opt) {
  TutteEngine eng{opt.memo, opt.cache, opt.stats, {}};
  return eng.whole(stripped(g));
}

TutteActivities tutte_activities(const DecoratedGraph& g0, const std::vector<int>& edge_order) {
  DecoratedGraph g = stripped(g0);
  if (structure(g).p0 != 1) throw Disconnected("activities expansion needs a connected graph");
  std::set<int> ids;
  for (const Edge& e : g.edges) ids.insert(e.id);
  std::set<int> seen;
  for (int id : edge_order) {
    if (!ids.count(id)) throw UnknownElement("edge " + std::to_string(id) + " not in the graph");
    if (!seen.insert(id).second)
      throw PreconditionViolated("edge order lists " + std::to_string(id) + " twice");
  }
  if (seen.size() != ids.size())
    throw PreconditionViolated("edge order must list every edge exactly once");

  TutteActivities out;
  out.poly = MultiPoly(0);
  std::vector<int> chosen;
  std::function<void(const DecoratedGraph&)> rec = [&](const DecoratedGraph& h) {
    StructureReport r = structure(h);
    std::set<int> passive(r.loop_ids.begin(), r.loop_ids.end());
    passive.insert(r.isthmus_ids.begin(), r.isthmus_ids.end());
    int pick = -1;
    for (int id : edge_order)
      if (h.has_edge(id) && !passive.count(id)) {
        pick = id;
        break;
      }
    if (pick < 0) {
      ActivityLeaf leaf;
      leaf.internal = (int)r.isthmus_ids.size();
      leaf.external = (int)r.loop_ids.size();
      leaf.tree_edges = chosen;
      leaf.tree_edges.insert(leaf.tree_edges.end(), r.isthmus_ids.begin(), r.isthmus_ids.end());
      std::sort(leaf.tree_edges.begin(), leaf.tree_edges.end());
      out.poly += MultiPoly::monomial(1, {{"x", leaf.internal}, {"y", leaf.external}});
      out.leaves.push_back(std::move(leaf));
      return;
    }
    rec(edit(h, pick, EditKind::del));
    chosen.push_back(pick);
    rec(edit(h, pick, EditKind::contract));
    chosen.pop_back();
  };
  rec(g);
  return out;
}

namespace {

MultiPoly bracket_state_sum(const DecoratedGraph& g) {
  int m = (int)g.edges.size();
  int n = g.vertex_count;
  MultiPoly acc(0);
  std::vector<int> root(n);
  std::function<int(int)> find = [&](int x) { return root[x] == x ? x : root[x] = find(root[x]); };
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    std::iota(root.begin(), root.end(), 0);
    int kept = 0;
    for (int k = 0; k < m; ++k)
      if (!((mask >> k) & 1)) {
        ++kept;
        root[find(g.edges[k].u)] = find(g.edges[k].v);
      }
    int p0 = 0;
    for (int v = 0; v < n; ++v) p0 += find(v) == v;
    int p1 = kept - n + p0;
    acc += MultiPoly::monomial(1, {{"mu", p0 + p1 - 1}, {"A", kept}, {"B", m - kept}});
  }
  return acc;
}

MultiPoly bracket_recursive(const DecoratedGraph& g) {
  if (g.edges.empty()) return MultiPoly::monomial(1, {{"mu", g.vertex_count - 1}});
  int id = g.edges[0].id;
  return MultiPoly::var("B") * bracket_recursive(edit(g, id, EditKind::del)) +
         MultiPoly::var("A") * bracket_recursive(edit(g, id, EditKind::contract_free));
}

}  // namespace

MultiPoly graph_bracket(const DecoratedGraph& g, BracketMode mode) {
  DecoratedGraph s = stripped(g);
  return mode == BracketMode::state_sum ? bracket_state_sum(s) : bracket_recursive(s);
}

MultiPoly chromatic(const DecoratedGraph& g, const GraphPolyOptions& opt) {
  MultiPoly chi = tutte(g, opt);
  MultiPoly at = chi.substitute(
      {{"x", MultiPoly(1) - MultiPoly::var("lambda")}, {"y", MultiPoly(0)}});
  int p0 = structure(g).p0;
  int sign = (g.vertex_count - p0) % 2 == 0 ? 1 : -1;
  return at * MultiPoly::monomial(sign, {{"lambda", p0}});
}

std::string ChromaticWeights::a_name(int index) const {
  auto it = names.find(index);
  return it != names.end() ? it->second.first : "A" + std::to_string(index);
}

std::string ChromaticWeights::b_name(int index) const {
  auto it = names.find(index);
  return it != names.end() ? it->second.second : "B" + std::to_string(index);
}

std::string ChromaticWeights::signature() const {
  std::string s = mu + "," + r1 + "," + r2;
  for (const auto& [i, ab] : names)
    s += ";" + std::to_string(i) + ":" + ab.first + "/" + ab.second;
  return s;
}

namespace {

void require_chromatic(const DecoratedGraph& g) {
  if (g.vertex_count == 0)
    throw PreconditionViolated("dichromatic polynomial needs at least one vertex");
  for (const Edge& e : g.edges)
    if (!e.chrom)
      throw MissingChromDecoration("edge " + std::to_string(e.id) +
                                   " carries no chromatic decoration");
}

MultiPoly r_state_sum(const DecoratedGraph& g, const ChromaticWeights& w) {
  int m = (int)g.edges.size();
  int n = g.vertex_count;
  int p0g = structure(g).p0;
  MultiPoly acc(0);
  std::vector<int> root(n);
  std::function<int(int)> find = [&](int x) { return root[x] == x ? x : root[x] = find(root[x]); };
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    // bit set: edge belongs to S (marked for contraction)
    std::iota(root.begin(), root.end(), 0);
    int in_s = 0;
    for (int k = 0; k < m; ++k)
      if ((mask >> k) & 1) {
        ++in_s;
        root[find(g.edges[k].u)] = find(g.edges[k].v);
      }
    int p0s = 0;
    for (int v = 0; v < n; ++v) p0s += find(v) == v;
    int p1s = in_s - n + p0s;
    std::map<std::string, int> pows;
    if (p0s - p0g) pows[w.r1] += p0s - p0g;
    if (p1s) pows[w.r2] += p1s;
    for (int k = 0; k < m; ++k) {
      const Edge& e = g.edges[k];
      bool dark = e.chrom->attr == Attr::d;
      bool in = (mask >> k) & 1;
      if (dark == in)
        pows[w.a_name(e.chrom->index)] += 1;
      else
        pows[w.b_name(e.chrom->index)] += 1;
    }
    acc += MultiPoly::monomial(
        1, std::vector<std::pair<std::string, int>>(pows.begin(), pows.end()));
  }
  return MultiPoly::monomial(1, {{w.mu, p0g - 1}}) * acc;
}

MultiPoly r_recursive(const DecoratedGraph& g, const ChromaticWeights& w) {
  if (g.edges.empty()) return MultiPoly::monomial(1, {{w.mu, g.vertex_count - 1}});
  const Edge e = g.edges[0];
  StructureReport r = structure(g);
  bool isthmus =
      std::count(r.isthmus_ids.begin(), r.isthmus_ids.end(), e.id) > 0;
  bool loop = e.is_loop();
  MultiPoly on_delete = r_recursive(edit(g, e.id, EditKind::del), w);
  MultiPoly on_contract =
      loop ? on_delete : r_recursive(edit(g, e.id, EditKind::contract), w);
  bool dark = e.chrom->attr == Attr::d;
  const std::string a = w.a_name(e.chrom->index);
  const std::string b = w.b_name(e.chrom->index);
  MultiPoly first = MultiPoly::var(dark ? b : a);
  if (isthmus) first *= MultiPoly::monomial(1, {{w.r1, 1}, {w.mu, -1}});
  MultiPoly second = MultiPoly::var(dark ? a : b);
  if (loop) second *= MultiPoly::var(w.r2);
  return first * on_delete + second * on_contract;
}

}  // namespace

MultiPoly dichromatic_R(const DecoratedGraph& g, const ChromaticWeights& w, RMode mode) {
  require_chromatic(g);
  return mode == RMode::state_sum ? r_state_sum(g, w) : r_recursive(g, w);
}

MultiPoly traldi_Q(const DecoratedGraph& g, const ChromaticWeights& w) {
  MultiPoly r = dichromatic_R(g, w, RMode::state_sum);
  MultiPoly q = r.substitute({{w.mu, MultiPoly::var("t")},
                              {w.r1, MultiPoly::var("t")},
                              {w.r2, MultiPoly::var("z")}});
  q *= MultiPoly::var("t");
  // Denominator per edge: B_i for dark, A_i for light. (With A_i for light
  // edges the quotient is a polynomial in t, z and the edge weights and the
  // defining recursions hold; dividing light edges by B_i satisfies neither.)
  std::map<std::string, int> denom;
  for (const Edge& e : g.edges)
    denom[e.chrom->attr == Attr::d ? w.b_name(e.chrom->index)
                                   : w.a_name(e.chrom->index)] -= 1;
  for (const auto& [name, exp] : denom) q *= MultiPoly::monomial(1, {{name, exp}});
  return q;
}

MultiPoly traldi_weight(const Edge& e, const ChromaticWeights& w) {
  if (!e.chrom)
    throw MissingChromDecoration("edge " + std::to_string(e.id) +
                                 " carries no chromatic decoration");
  const std::string a = w.a_name(e.chrom->index);
  const std::string b = w.b_name(e.chrom->index);
  return e.chrom->attr == Attr::d ? MultiPoly::monomial(1, {{a, 1}, {b, -1}})
                                  : MultiPoly::monomial(1, {{b, 1}, {a, -1}});
}

}  // namespace gp
