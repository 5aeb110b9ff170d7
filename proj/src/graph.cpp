#include "gp/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "json.hpp"

namespace gp {

Color flipped(Color c) { return c == Color::b ? Color::w : Color::b; }
Attr flipped(Attr a) { return a == Attr::d ? Attr::l : Attr::d; }

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace

const Edge& DecoratedGraph::edge_by_id(int id) const {
  for (const Edge& e : edges)
    if (e.id == id) return e;
  throw UnknownElement("no edge with id " + std::to_string(id));
}

Edge& DecoratedGraph::edge_by_id(int id) {
  for (Edge& e : edges)
    if (e.id == id) return e;
  throw UnknownElement("no edge with id " + std::to_string(id));
}

bool DecoratedGraph::has_edge(int id) const {
  for (const Edge& e : edges)
    if (e.id == id) return true;
  return false;
}

int DecoratedGraph::fresh_edge_id() const {
  int m = 0;
  for (const Edge& e : edges) m = std::max(m, e.id + 1);
  return m;
}

namespace {

// Directed edge "darts": dart 2*k+0 runs u->v along edges[k], 2*k+1 runs v->u.
// next_dart follows the face walk induced by the rotation system.
struct FaceTracer {
  const DecoratedGraph& g;
  std::map<std::pair<int, int>, std::pair<int, int>> end_pos;  // (edge id,end) -> (vertex, slot)
  std::map<int, int> idx_of_id;

  explicit FaceTracer(const DecoratedGraph& g_) : g(g_) {
    const Rotation& rot = *g.rotation;
    for (int v = 0; v < (int)rot.size(); ++v)
      for (int i = 0; i < (int)rot[v].size(); ++i)
        end_pos[{rot[v][i].edge, rot[v][i].end}] = {v, i};
    for (int i = 0; i < (int)g.edges.size(); ++i) idx_of_id[g.edges[i].id] = i;
  }

  int next_dart(int dart) const {
    const Edge& e = g.edges[dart / 2];
    int head_end = (dart % 2 == 0) ? 1 : 0;
    auto it = end_pos.find({e.id, head_end});
    auto [v, slot] = it->second;
    const auto& ring = (*g.rotation)[v];
    const EndRef& nxt = ring[(slot + 1) % ring.size()];
    int k = idx_of_id.at(nxt.edge);
    return 2 * k + (nxt.end == 0 ? 0 : 1);
  }

  // Orbits of next_dart, discovered in dart index order.
  std::vector<std::vector<int>> orbits() const {
    int nd = 2 * (int)g.edges.size();
    std::vector<int> face_of(nd, -1);
    std::vector<std::vector<int>> out;
    for (int d = 0; d < nd; ++d) {
      if (face_of[d] >= 0) continue;
      std::vector<int> cyc;
      int cur = d;
      while (face_of[cur] < 0) {
        face_of[cur] = (int)out.size();
        cyc.push_back(cur);
        cur = next_dart(cur);
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }
};

std::vector<int> vertex_component(const DecoratedGraph& g) {
  UnionFind uf(g.vertex_count);
  for (const Edge& e : g.edges) uf.unite(e.u, e.v);
  std::vector<int> comp(g.vertex_count);
  for (int v = 0; v < g.vertex_count; ++v) comp[v] = uf.find(v);
  return comp;
}

}  // namespace

void DecoratedGraph::validate() const {
  std::set<int> ids;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count)
      throw VertexOutOfRange("edge " + std::to_string(e.id) + " endpoint out of range");
    if (!ids.insert(e.id).second)
      throw ParseError("duplicate edge id " + std::to_string(e.id));
    if (e.sign && *e.sign != 1 && *e.sign != -1)
      throw ParseError("edge sign must be +1 or -1");
  }
  if (!rotation) return;
  if ((int)rotation->size() != vertex_count)
    throw NoEmbedding("rotation must list every vertex");
  std::set<std::pair<int, int>> seen;
  for (const auto& ring : *rotation)
    for (const EndRef& r : ring) {
      if (!has_edge(r.edge) || (r.end != 0 && r.end != 1))
        throw NoEmbedding("rotation references a missing edge-end");
      if (!seen.insert({r.edge, r.end}).second)
        throw NoEmbedding("edge-end repeated in rotation");
    }
  if (seen.size() != 2 * edges.size())
    throw NoEmbedding("rotation must cover every edge-end");
  // Each end must sit at its own vertex.
  for (int v = 0; v < vertex_count; ++v)
    for (const EndRef& r : (*rotation)[v]) {
      const Edge& e = edge_by_id(r.edge);
      int at = r.end == 0 ? e.u : e.v;
      if (at != v) throw NoEmbedding("edge-end listed at the wrong vertex");
    }
  // Genus check per component: V - E + F = 2.
  FaceTracer tracer(*this);
  auto faces = tracer.orbits();
  std::vector<int> comp = vertex_component(*this);
  std::map<int, int> vcnt, ecnt, fcnt;
  for (int v = 0; v < vertex_count; ++v) vcnt[comp[v]]++;
  for (const Edge& e : edges) ecnt[comp[e.u]]++;
  for (const auto& f : faces) fcnt[comp[edges[f[0] / 2].u]]++;
  for (const auto& [c, nv] : vcnt) {
    int ne = ecnt.count(c) ? ecnt[c] : 0;
    int nf = ne == 0 ? 1 : (fcnt.count(c) ? fcnt[c] : 0);
    if (nv - ne + nf != 2)
      throw EulerViolation("rotation system is not planar on a component");
  }
}

StructureReport structure(const DecoratedGraph& g) {
  StructureReport r;
  std::vector<int> comp = vertex_component(g);
  std::set<int> roots(comp.begin(), comp.end());
  r.p0 = (int)roots.size();
  r.p1 = (int)g.edges.size() - g.vertex_count + r.p0;

  for (const Edge& e : g.edges)
    if (e.is_loop()) r.loop_ids.push_back(e.id);
  std::sort(r.loop_ids.begin(), r.loop_ids.end());

  // Biconnected components over non-loop edges (Hopcroft-Tarjan).
  int n = g.vertex_count;
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (edge index, other)
  for (int k = 0; k < (int)g.edges.size(); ++k) {
    const Edge& e = g.edges[k];
    if (e.is_loop()) continue;
    adj[e.u].push_back({k, e.v});
    adj[e.v].push_back({k, e.u});
  }
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> used(g.edges.size(), 0);
  std::vector<int> estack;
  int timer = 0;

  struct Frame {
    int v;
    size_t next = 0;
    int via = -1;  // edge index of the tree edge into v
  };
  for (int start = 0; start < n; ++start) {
    if (disc[start] >= 0) continue;
    std::vector<Frame> st;
    disc[start] = low[start] = timer++;
    st.push_back({start, 0, -1});
    while (!st.empty()) {
      Frame& f = st.back();
      int v = f.v;
      if (f.next < adj[v].size()) {
        auto [k, w] = adj[v][f.next++];
        if (used[k]) continue;
        used[k] = 1;
        estack.push_back(k);
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          st.push_back({w, 0, k});
        } else {
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        int via = f.via;
        st.pop_back();
        if (!st.empty()) {
          int parent = st.back().v;
          low[parent] = std::min(low[parent], low[v]);
          if (low[v] >= disc[parent]) {
            std::vector<int> block;
            for (;;) {
              int k = estack.back();
              estack.pop_back();
              block.push_back(g.edges[k].id);
              if (k == via) break;
            }
            std::sort(block.begin(), block.end());
            r.blocks.push_back(std::move(block));
          }
        }
      }
    }
  }
  for (int id : r.loop_ids) r.blocks.push_back({id});
  std::sort(r.blocks.begin(), r.blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  for (const auto& blk : r.blocks)
    if (blk.size() == 1 && !g.edge_by_id(blk[0]).is_loop()) r.isthmus_ids.push_back(blk[0]);
  std::sort(r.isthmus_ids.begin(), r.isthmus_ids.end());

  r.is_2connected = r.p0 == 1 && r.blocks.size() == 1 &&
                    !(r.blocks[0].size() == 1 && !g.edge_by_id(r.blocks[0][0]).is_loop());
  return r;
}

namespace {

void rotation_drop_edge(Rotation& rot, int edge_id) {
  for (auto& ring : rot) {
    std::vector<EndRef> keep;
    for (const EndRef& r : ring)
      if (r.edge != edge_id) keep.push_back(r);
    ring = std::move(keep);
  }
}

std::vector<EndRef> ring_after(const std::vector<EndRef>& ring, int edge_id, int end) {
  size_t pos = 0;
  for (size_t i = 0; i < ring.size(); ++i)
    if (ring[i].edge == edge_id && ring[i].end == end) pos = i;
  std::vector<EndRef> out;
  for (size_t i = 1; i < ring.size(); ++i) out.push_back(ring[(pos + i) % ring.size()]);
  return out;
}

}  // namespace

DecoratedGraph edit(const DecoratedGraph& g, int edge_id, EditKind kind) {
  DecoratedGraph out = g;
  Edge e = g.edge_by_id(edge_id);
  auto erase_edge = [&]() {
    out.edges.erase(std::remove_if(out.edges.begin(), out.edges.end(),
                                   [&](const Edge& x) { return x.id == edge_id; }),
                    out.edges.end());
  };
  switch (kind) {
    case EditKind::del:
      erase_edge();
      if (out.rotation) rotation_drop_edge(*out.rotation, edge_id);
      return out;
    case EditKind::contract_free:
      if (e.is_loop()) {
        erase_edge();
        if (out.rotation) {
          rotation_drop_edge(*out.rotation, edge_id);
          out.rotation->push_back({});
        }
        out.vertex_count += 1;
        return out;
      }
      return edit(g, edge_id, EditKind::contract);
    case EditKind::contract: {
      if (e.is_loop()) throw ContractLoop("cannot contract loop " + std::to_string(edge_id));
      int a = std::min(e.u, e.v), b = std::max(e.u, e.v);
      erase_edge();
      if (out.rotation) {
        Rotation& rot = *out.rotation;
        std::vector<EndRef> merged = ring_after(rot[e.u], edge_id, 0);
        std::vector<EndRef> tail = ring_after(rot[e.v], edge_id, 1);
        merged.insert(merged.end(), tail.begin(), tail.end());
        rot[a] = std::move(merged);
        rot.erase(rot.begin() + b);
      }
      auto remap = [&](int x) { return x == b ? a : (x > b ? x - 1 : x); };
      for (Edge& x : out.edges) {
        x.u = remap(x.u);
        x.v = remap(x.v);
      }
      out.vertex_count -= 1;
      return out;
    }
    case EditKind::recolor: {
      Edge& x = out.edge_by_id(edge_id);
      if (!x.color) throw UncoloredEdge("recolor needs a colored edge");
      x.color = flipped(*x.color);
      return out;
    }
    case EditKind::resign: {
      Edge& x = out.edge_by_id(edge_id);
      if (!x.sign) throw PreconditionViolated("resign needs a signed edge");
      x.sign = -*x.sign;
      return out;
    }
    case EditKind::reattribute: {
      Edge& x = out.edge_by_id(edge_id);
      if (!x.chrom) throw MissingChromDecoration("reattribute needs a chromatic edge");
      x.chrom->attr = flipped(x.chrom->attr);
      return out;
    }
  }
  throw PreconditionViolated("unknown edit kind");
}

Lemma18Witness lemma18_witness(const DecoratedGraph& g, int edge_id) {
  StructureReport base = structure(g);
  if (!base.is_2connected || g.edges.size() < 2)
    throw PreconditionViolated("lemma18_witness needs a 2-connected graph with >= 2 edges");
  const Edge& e = g.edge_by_id(edge_id);
  if (e.is_loop()) throw PreconditionViolated("a 2-connected graph with >= 2 edges has no loop");
  Lemma18Witness w;
  DecoratedGraph del = edit(g, edge_id, EditKind::del);
  StructureReport del_rep = structure(del);
  if (del_rep.is_2connected) {
    w.survivor = Survivor::deleted;
    w.graph = std::move(del);
    w.proof = std::move(del_rep);
    return w;
  }
  DecoratedGraph con = edit(g, edge_id, EditKind::contract);
  StructureReport con_rep = structure(con);
  if (!con_rep.is_2connected)
    throw PreconditionViolated("neither deletion nor contraction stayed 2-connected");
  w.survivor = Survivor::contracted;
  w.graph = std::move(con);
  w.proof = std::move(con_rep);
  return w;
}

namespace {

Int laplacian_minor_det(const DecoratedGraph& g) {
  int n = g.vertex_count;
  if (n <= 1) return 1;
  std::vector<std::vector<Int>> m(n - 1, std::vector<Int>(n - 1, 0));
  for (const Edge& e : g.edges) {
    if (e.is_loop()) continue;
    if (e.u > 0) m[e.u - 1][e.u - 1] += 1;
    if (e.v > 0) m[e.v - 1][e.v - 1] += 1;
    if (e.u > 0 && e.v > 0) {
      m[e.u - 1][e.v - 1] -= 1;
      m[e.v - 1][e.u - 1] -= 1;
    }
  }
  // Bareiss fraction-free elimination.
  int dim = n - 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < dim; ++k) {
    if (m[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < dim; ++i)
        if (m[i][k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < dim; ++i)
      for (int j = k + 1; j < dim; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[dim - 1][dim - 1];
}

}  // namespace

SpanningTrees spanning_trees(const DecoratedGraph& g, int enumerate_cap) {
  if (structure(g).p0 != 1) throw Disconnected("spanning trees need a connected graph");
  SpanningTrees out;
  out.count = laplacian_minor_det(g);
  if ((int)g.edges.size() > enumerate_cap) return out;

  std::vector<Edge> es = g.edges;
  std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  std::vector<std::vector<int>> trees;
  std::vector<int> chosen;
  int need = g.vertex_count - 1;
  std::vector<int> parent(g.vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : find(parent[x]); };
  std::function<void(size_t, int)> rec = [&](size_t idx, int left) {
    if (left == 0) {
      trees.push_back(chosen);
      return;
    }
    if (idx >= es.size() || (int)(es.size() - idx) < left) return;
    const Edge& e = es[idx];
    if (!e.is_loop()) {
      int ru = find(e.u), rv = find(e.v);
      if (ru != rv) {
        parent[std::max(ru, rv)] = std::min(ru, rv);
        chosen.push_back(e.id);
        rec(idx + 1, left - 1);
        chosen.pop_back();
        parent[std::max(ru, rv)] = std::max(ru, rv);
      }
    }
    rec(idx + 1, left);
  };
  rec(0, need);
  out.trees = std::move(trees);
  return out;
}

namespace {

// ---- canonical code -------------------------------------------------------

std::string edge_sig(const Edge& e) {
  std::string s;
  s += e.color ? (*e.color == Color::b ? 'b' : 'w') : '.';
  s += e.sign ? (*e.sign > 0 ? '+' : '-') : '.';
  if (e.chrom) {
    s += 'c';
    s += std::to_string(e.chrom->index);
    s += e.chrom->attr == Attr::d ? 'd' : 'l';
  } else {
    s += '.';
  }
  if (e.special) s += 's';
  return s;
}

struct Component {
  int n = 0;
  std::vector<Edge> edges;  // endpoints renumbered to 0..n-1
};

std::vector<Component> split_components(const DecoratedGraph& g) {
  std::vector<int> comp = vertex_component(g);
  std::map<int, int> cidx;
  for (int v = 0; v < g.vertex_count; ++v) cidx.emplace(comp[v], (int)cidx.size());
  std::vector<Component> out(cidx.size());
  std::vector<int> local(g.vertex_count);
  for (int v = 0; v < g.vertex_count; ++v) {
    Component& c = out[cidx[comp[v]]];
    local[v] = c.n++;
  }
  for (const Edge& e : g.edges) {
    Component& c = out[cidx[comp[e.u]]];
    Edge x = e;
    x.u = local[e.u];
    x.v = local[e.v];
    c.edges.push_back(x);
  }
  return out;
}

struct Canonizer {
  const Component& c;
  std::vector<int> sig_id;                       // per edge, interned signature
  std::vector<std::vector<std::pair<int, int>>> inc;  // vertex -> (edge idx, other or -1 for loop)
  std::string best;
  bool have = false;

  explicit Canonizer(const Component& comp) : c(comp) {
    // Intern signatures by sorted rank so the ids do not depend on the
    // edge list order (the refinement keys must be label-independent).
    std::map<std::string, int> intern;
    for (const Edge& e : c.edges) intern.emplace(edge_sig(e), 0);
    int next = 0;
    for (auto& [sig, idx] : intern) idx = next++;
    sig_id.resize(c.edges.size());
    for (size_t k = 0; k < c.edges.size(); ++k) sig_id[k] = intern[edge_sig(c.edges[k])];
    inc.resize(c.n);
    for (size_t k = 0; k < c.edges.size(); ++k) {
      const Edge& e = c.edges[k];
      if (e.is_loop()) {
        inc[e.u].push_back({(int)k, -1});
      } else {
        inc[e.u].push_back({(int)k, e.v});
        inc[e.v].push_back({(int)k, e.u});
      }
    }
  }

  std::vector<int> refine(std::vector<int> col) const {
    for (;;) {
      std::vector<std::vector<std::pair<int, int>>> key(c.n);
      for (int v = 0; v < c.n; ++v) {
        for (auto [k, other] : inc[v])
          key[v].push_back({sig_id[k], other < 0 ? -1 : col[other]});
        std::sort(key[v].begin(), key[v].end());
      }
      std::map<std::pair<int, std::vector<std::pair<int, int>>>, int> order;
      for (int v = 0; v < c.n; ++v) order[{col[v], key[v]}] = 0;
      int next = 0;
      for (auto& [k, idx] : order) idx = next++;
      std::vector<int> out(c.n);
      for (int v = 0; v < c.n; ++v) out[v] = order[{col[v], key[v]}];
      if (out == col) return out;
      col = std::move(out);
    }
  }

  std::string certificate(const std::vector<int>& col) const {
    std::vector<int> pos(c.n);
    for (int v = 0; v < c.n; ++v) pos[v] = col[v];
    std::vector<std::string> recs;
    for (size_t k = 0; k < c.edges.size(); ++k) {
      const Edge& e = c.edges[k];
      int a = pos[e.u], b = pos[e.v];
      if (a > b) std::swap(a, b);
      recs.push_back(std::to_string(a) + "," + std::to_string(b) + "," + edge_sig(c.edges[k]));
    }
    std::sort(recs.begin(), recs.end());
    std::string s = "n" + std::to_string(c.n) + "m" + std::to_string(c.edges.size()) + ":";
    for (const auto& r : recs) {
      s += r;
      s += ';';
    }
    return s;
  }

  void search(std::vector<int> col) {
    col = refine(col);
    int cell_color = -1;
    std::vector<int> cell;
    std::vector<int> count(c.n, 0);
    for (int v = 0; v < c.n; ++v) count[col[v]]++;
    for (int color = 0; color < c.n; ++color)
      if (count[color] > 1) {
        cell_color = color;
        break;
      }
    if (cell_color < 0) {
      std::string cert = certificate(col);
      if (!have || cert < best) {
        best = std::move(cert);
        have = true;
      }
      return;
    }
    for (int v = 0; v < c.n; ++v)
      if (col[v] == cell_color) cell.push_back(v);
    for (int v : cell) {
      std::vector<int> next(c.n);
      for (int u = 0; u < c.n; ++u) next[u] = 2 * col[u] + 1;
      next[v] = 2 * col[v];
      search(std::move(next));
    }
  }

  std::string run() {
    std::vector<int> col(c.n, 0);
    if (c.n == 0) return "n0m0:";
    search(std::move(col));
    return best;
  }
};

}  // namespace

std::string canonical_code(const DecoratedGraph& g) {
  std::vector<Component> comps = split_components(g);
  std::vector<std::string> codes;
  for (const Component& c : comps) codes.push_back(Canonizer(c).run());
  std::sort(codes.begin(), codes.end());
  std::string out = "G";
  for (const auto& s : codes) {
    out += s;
    out += '|';
  }
  return out;
}

namespace {

DecoratedGraph induced_component(const DecoratedGraph& g, const std::vector<int>& keep_vertices) {
  DecoratedGraph out;
  std::map<int, int> local;
  for (int v : keep_vertices) local.emplace(v, (int)local.size());
  out.vertex_count = (int)local.size();
  for (const Edge& e : g.edges)
    if (local.count(e.u)) {
      Edge x = e;
      x.u = local[e.u];
      x.v = local[e.v];
      out.edges.push_back(x);
    }
  if (g.rotation) {
    Rotation rot(out.vertex_count);
    for (int v : keep_vertices) rot[local[v]] = (*g.rotation)[v];
    out.rotation = std::move(rot);
  }
  return out;
}

FacesAndDual dual_connected(const DecoratedGraph& g, DualMode mode) {
  FacesAndDual out;
  if (g.edges.empty()) {
    out.faces.push_back({});
    out.dual.vertex_count = 1;
    out.dual.rotation = Rotation(1);
    return out;
  }
  FaceTracer tracer(g);
  auto orbits = tracer.orbits();
  int nd = 2 * (int)g.edges.size();
  std::vector<int> face_of(nd, -1);
  for (int f = 0; f < (int)orbits.size(); ++f)
    for (int d : orbits[f]) face_of[d] = f;

  for (const auto& orbit : orbits) {
    std::vector<std::pair<int, int>> walk;
    for (int d : orbit) walk.push_back({g.edges[d / 2].id, d % 2 == 0 ? 1 : -1});
    out.faces.push_back(std::move(walk));
  }

  DecoratedGraph& dual = out.dual;
  dual.vertex_count = (int)orbits.size();
  for (int k = 0; k < (int)g.edges.size(); ++k) {
    Edge e = g.edges[k];
    Edge d;
    d.id = e.id;
    d.u = face_of[2 * k];
    d.v = face_of[2 * k + 1];
    d.sign = e.sign;
    d.special = e.special;
    d.chrom = e.chrom;
    d.color = e.color;
    if (mode == DualMode::knot) {
      if (e.color) d.color = flipped(*e.color);
    } else {
      if (e.chrom) d.chrom = Chrom{e.chrom->index, flipped(e.chrom->attr)};
    }
    dual.edges.push_back(d);
  }
  Rotation rot(dual.vertex_count);
  for (int f = 0; f < (int)orbits.size(); ++f)
    for (int d : orbits[f]) rot[f].push_back({g.edges[d / 2].id, d % 2});
  dual.rotation = std::move(rot);
  dual.validate();
  return out;
}

}  // namespace

FacesAndDual faces_and_dual(const DecoratedGraph& g, DualMode mode) {
  if (!g.rotation) throw NoEmbedding("faces_and_dual needs a rotation system");
  g.validate();
  std::vector<int> comp = vertex_component(g);
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < g.vertex_count; ++v) groups[comp[v]].push_back(v);
  if (groups.size() == 1) return dual_connected(g, mode);

  FacesAndDual out;
  for (const auto& [root, verts] : groups) {
    (void)root;
    FacesAndDual part = dual_connected(induced_component(g, verts), mode);
    int off = out.dual.vertex_count;
    out.dual.vertex_count += part.dual.vertex_count;
    for (Edge e : part.dual.edges) {
      e.u += off;
      e.v += off;
      out.dual.edges.push_back(e);
    }
    if (!out.dual.rotation) out.dual.rotation = Rotation();
    for (auto& ring : *part.dual.rotation) out.dual.rotation->push_back(ring);
    for (auto& f : part.faces) out.faces.push_back(std::move(f));
  }
  out.dual.validate();
  return out;
}

namespace {

DecoratedGraph glue(const DecoratedGraph& g1, int v1, int w1, const DecoratedGraph& g2,
                    int v2, int w2, bool swap_targets) {
  if (v1 < 0 || v1 >= g1.vertex_count || w1 < 0 || w1 >= g1.vertex_count)
    throw VertexOutOfRange("first factor vertex out of range");
  if (v2 < 0 || v2 >= g2.vertex_count || w2 < 0 || w2 >= g2.vertex_count)
    throw VertexOutOfRange("second factor vertex out of range");
  if (v1 == w1 || v2 == w2)
    throw PreconditionViolated("two-vertex product needs two distinct vertices per factor");
  int tv = swap_targets ? w1 : v1;
  int tw = swap_targets ? v1 : w1;

  DecoratedGraph out;
  out.vertex_count = g1.vertex_count + g2.vertex_count - 2;
  out.edges = g1.edges;
  std::vector<int> map2(g2.vertex_count);
  int next = g1.vertex_count;
  for (int x = 0; x < g2.vertex_count; ++x) {
    if (x == v2)
      map2[x] = tv;
    else if (x == w2)
      map2[x] = tw;
    else
      map2[x] = next++;
  }
  int id_off = 0;
  for (const Edge& e : g2.edges)
    if (g1.has_edge(e.id)) {
      id_off = g1.fresh_edge_id();
      break;
    }
  for (Edge e : g2.edges) {
    e.id += id_off;
    e.u = map2[e.u];
    e.v = map2[e.v];
    out.edges.push_back(e);
  }
  return out;
}

}  // namespace

DecoratedGraph two_vertex_product(const DecoratedGraph& g1, int v1, int w1,
                                  const DecoratedGraph& g2, int v2, int w2) {
  return glue(g1, v1, w1, g2, v2, w2, false);
}

DecoratedGraph mutant(const DecoratedGraph& g1, int v1, int w1, const DecoratedGraph& g2,
                      int v2, int w2) {
  return glue(g1, v1, w1, g2, v2, w2, true);
}

bool bichromatic_cycle(const DecoratedGraph& g) {
  for (const Edge& e : g.edges)
    if (!e.color) throw UncoloredEdge("bichromatic_cycle needs all edges colored");
  StructureReport rep = structure(g);
  for (const auto& blk : rep.blocks) {
    if (blk.size() < 2) continue;
    bool has_b = false, has_w = false;
    for (int id : blk) {
      Color c = *g.edge_by_id(id).color;
      (c == Color::b ? has_b : has_w) = true;
    }
    if (has_b && has_w) return true;
  }
  return false;
}

DecoratedGraph color_subgraph(const DecoratedGraph& g, Color keep) {
  DecoratedGraph out;
  out.vertex_count = g.vertex_count;
  for (const Edge& e : g.edges)
    if (e.color && *e.color == keep) out.edges.push_back(e);
  if (g.rotation) {
    Rotation rot(out.vertex_count);
    for (int v = 0; v < g.vertex_count; ++v)
      for (const EndRef& r : (*g.rotation)[v])
        if (out.has_edge(r.edge)) rot[v].push_back(r);
    out.rotation = std::move(rot);
  }
  return out;
}

DecoratedGraph color_quotient(const DecoratedGraph& g, Color keep) {
  UnionFind uf(g.vertex_count);
  for (const Edge& e : g.edges)
    if (e.color && *e.color != keep) uf.unite(e.u, e.v);
  std::map<int, int> classes;
  for (int v = 0; v < g.vertex_count; ++v) classes.emplace(uf.find(v), (int)classes.size());
  DecoratedGraph out;
  out.vertex_count = (int)classes.size();
  for (const Edge& e : g.edges) {
    if (!e.color || *e.color != keep) continue;
    Edge x = e;
    x.u = classes[uf.find(e.u)];
    x.v = classes[uf.find(e.v)];
    out.edges.push_back(x);
  }
  return out;
}

DecoratedGraph make_edgeless(int n) {
  DecoratedGraph g;
  g.vertex_count = n;
  return g;
}

DecoratedGraph make_path(int edges) {
  DecoratedGraph g;
  g.vertex_count = edges + 1;
  for (int i = 0; i < edges; ++i) g.edges.push_back({i, i, i + 1, {}, {}, {}, false});
  return g;
}

DecoratedGraph make_cycle(int edges, bool with_rotation) {
  DecoratedGraph g;
  g.vertex_count = edges == 1 ? 1 : edges;
  for (int i = 0; i < edges; ++i)
    g.edges.push_back({i, i % g.vertex_count, (i + 1) % g.vertex_count, {}, {}, {}, false});
  if (with_rotation) {
    Rotation rot(g.vertex_count);
    if (edges == 1) {
      rot[0] = {{0, 0}, {0, 1}};
    } else {
      for (int v = 0; v < g.vertex_count; ++v)
        rot[v] = {{(v + edges - 1) % edges, 1}, {v, 0}};
    }
    g.rotation = std::move(rot);
  }
  return g;
}

DecoratedGraph make_theta(int parallel_edges, bool with_rotation) {
  DecoratedGraph g;
  g.vertex_count = 2;
  for (int i = 0; i < parallel_edges; ++i) g.edges.push_back({i, 0, 1, {}, {}, {}, false});
  if (with_rotation) {
    Rotation rot(2);
    for (int i = 0; i < parallel_edges; ++i) rot[0].push_back({i, 0});
    for (int i = parallel_edges - 1; i >= 0; --i) rot[1].push_back({i, 1});
    g.rotation = std::move(rot);
  }
  return g;
}

DecoratedGraph make_bouquet(int loops) {
  DecoratedGraph g;
  g.vertex_count = 1;
  for (int i = 0; i < loops; ++i) g.edges.push_back({i, 0, 0, {}, {}, {}, false});
  return g;
}

DecoratedGraph make_complete(int n) {
  DecoratedGraph g;
  g.vertex_count = n;
  int id = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.edges.push_back({id++, i, j, {}, {}, {}, false});
  return g;
}

DecoratedGraph relabeled(const DecoratedGraph& g, const std::vector<int>& vperm,
                         const std::vector<int>& edge_shuffle, const std::map<int, int>& new_ids) {
  DecoratedGraph out;
  out.vertex_count = g.vertex_count;
  for (int pos : edge_shuffle) {
    Edge e = g.edges[pos];
    e.u = vperm[e.u];
    e.v = vperm[e.v];
    auto it = new_ids.find(e.id);
    if (it != new_ids.end()) e.id = it->second;
    out.edges.push_back(e);
  }
  return out;
}

// ---- JSON -----------------------------------------------------------------

namespace {

using nlohmann::ordered_json;

ordered_json edge_to_json(const Edge& e) {
  ordered_json j;
  j["id"] = e.id;
  j["u"] = e.u;
  j["v"] = e.v;
  if (e.color) j["color"] = *e.color == Color::b ? "b" : "w";
  if (e.sign) j["sign"] = *e.sign > 0 ? "+" : "-";
  if (e.chrom) {
    j["chrom"] = ordered_json{{"i", e.chrom->index},
                              {"attr", e.chrom->attr == Attr::d ? "d" : "l"}};
  }
  if (e.special) j["etype"] = "s";
  return j;
}

DecoratedGraph graph_from_json(const nlohmann::json& j);

}  // namespace

std::string DecoratedGraph::to_json_string() const {
  ordered_json j;
  j["vertices"] = vertex_count;
  j["edges"] = ordered_json::array();
  for (const Edge& e : edges) j["edges"].push_back(edge_to_json(e));
  if (rotation) {
    ordered_json rot = ordered_json::array();
    for (const auto& ring : *rotation) {
      ordered_json r = ordered_json::array();
      for (const EndRef& x : ring) r.push_back(ordered_json{{"edge", x.edge}, {"end", x.end}});
      rot.push_back(r);
    }
    j["rotation"] = rot;
  }
  return j.dump();
}

namespace {

DecoratedGraph graph_from_json(const nlohmann::json& j) {
  DecoratedGraph g;
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw ParseError("graph JSON needs \"vertices\" and \"edges\"");
  if (!j["vertices"].is_number_integer() || j["vertices"].get<int>() < 0)
    throw ParseError("\"vertices\" must be a nonnegative integer");
  g.vertex_count = j["vertices"].get<int>();
  if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array");
  for (const auto& je : j["edges"]) {
    if (!je.is_object() || !je.contains("id") || !je.contains("u") || !je.contains("v"))
      throw ParseError("edge needs id, u, v");
    Edge e;
    e.id = je["id"].get<int>();
    e.u = je["u"].get<int>();
    e.v = je["v"].get<int>();
    if (je.contains("color")) {
      std::string c = je["color"].get<std::string>();
      if (c != "b" && c != "w") throw ParseError("edge color must be \"b\" or \"w\"");
      e.color = c == "b" ? Color::b : Color::w;
    }
    if (je.contains("sign")) {
      std::string s = je["sign"].get<std::string>();
      if (s != "+" && s != "-") throw ParseError("edge sign must be \"+\" or \"-\"");
      e.sign = s == "+" ? 1 : -1;
    }
    if (je.contains("chrom")) {
      const auto& jc = je["chrom"];
      if (!jc.is_object() || !jc.contains("i") || !jc.contains("attr"))
        throw ParseError("chrom needs i and attr");
      std::string a = jc["attr"].get<std::string>();
      if (a != "d" && a != "l") throw ParseError("chrom attr must be \"d\" or \"l\"");
      e.chrom = Chrom{jc["i"].get<int>(), a == "d" ? Attr::d : Attr::l};
    }
    if (je.contains("etype")) {
      if (je["etype"].get<std::string>() != "s") throw ParseError("etype must be \"s\"");
      e.special = true;
    }
    g.edges.push_back(e);
  }
  if (j.contains("rotation")) {
    if (!j["rotation"].is_array()) throw ParseError("rotation must be an array");
    Rotation rot;
    for (const auto& jr : j["rotation"]) {
      std::vector<EndRef> ring;
      for (const auto& jx : jr) {
        if (!jx.is_object() || !jx.contains("edge") || !jx.contains("end"))
          throw ParseError("rotation entry needs edge and end");
        ring.push_back({jx["edge"].get<int>(), jx["end"].get<int>()});
      }
      rot.push_back(std::move(ring));
    }
    g.rotation = std::move(rot);
  }
  g.validate();
  return g;
}

}  // namespace

DecoratedGraph DecoratedGraph::from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("bad JSON: ") + ex.what());
  }
  try {
    return graph_from_json(j);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("bad graph JSON: ") + ex.what());
  }
}

}  // namespace gp
