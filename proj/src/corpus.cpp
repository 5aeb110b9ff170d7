#include "gp/corpus.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gp {

std::vector<DecoratedGraph> all_connected_multigraphs(int max_edges) {
  std::vector<DecoratedGraph> out;
  std::map<std::string, DecoratedGraph> level;
  DecoratedGraph k1 = make_edgeless(1);
  level.emplace(canonical_code(k1), k1);
  for (const auto& [code, g] : level) out.push_back(g);
  for (int m = 1; m <= max_edges; ++m) {
    std::map<std::string, DecoratedGraph> next;
    for (const auto& [code, g] : level) {
      (void)code;
      auto consider = [&](DecoratedGraph h) {
        std::string c = canonical_code(h);
        next.emplace(std::move(c), std::move(h));
      };
      for (int u = 0; u < g.vertex_count; ++u)
        for (int v = u; v < g.vertex_count; ++v) {
          DecoratedGraph h = g;
          h.edges.push_back({h.fresh_edge_id(), u, v, {}, {}, {}, false});
          consider(std::move(h));
        }
      for (int u = 0; u < g.vertex_count; ++u) {
        DecoratedGraph h = g;
        h.edges.push_back({h.fresh_edge_id(), u, h.vertex_count, {}, {}, {}, false});
        h.vertex_count += 1;
        consider(std::move(h));
      }
    }
    level = std::move(next);
    for (const auto& [code, g] : level) {
      (void)code;
      out.push_back(g);
    }
  }
  return out;
}

DecoratedGraph random_connected_multigraph(std::mt19937& rng, int edges, int max_vertices) {
  int n = 1 + (int)(rng() % (unsigned)std::max(1, std::min(max_vertices, edges + 1)));
  DecoratedGraph g = make_edgeless(n);
  int id = 0;
  for (int v = 1; v < n; ++v) g.edges.push_back({id++, (int)(rng() % (unsigned)v), v, {}, {}, {}, false});
  while ((int)g.edges.size() < edges) {
    int u = (int)(rng() % (unsigned)n);
    int v = (int)(rng() % (unsigned)n);
    g.edges.push_back({id++, u, v, {}, {}, {}, false});
  }
  return g;
}

namespace {

struct Corner {
  int vertex;
  int arrive_edge;  // edge id whose arriving end precedes the corner
  int arrive_end;
};

// Corners of every face of an embedded graph, grouped per face.
std::vector<std::vector<Corner>> face_corners(const DecoratedGraph& g) {
  FacesAndDual fd = faces_and_dual(g);
  std::vector<std::vector<Corner>> out;
  for (const auto& walk : fd.faces) {
    std::vector<Corner> cs;
    for (const auto& [eid, dir] : walk) {
      const Edge& e = g.edge_by_id(eid);
      int head = dir > 0 ? e.v : e.u;
      cs.push_back({head, eid, dir > 0 ? 1 : 0});
    }
    out.push_back(std::move(cs));
  }
  return out;
}

void insert_after(std::vector<EndRef>& ring, int arrive_edge, int arrive_end, EndRef what) {
  for (size_t i = 0; i < ring.size(); ++i)
    if (ring[i].edge == arrive_edge && ring[i].end == arrive_end) {
      ring.insert(ring.begin() + i + 1, what);
      return;
    }
  ring.push_back(what);
}

}  // namespace

DecoratedGraph random_plane_2connected(std::mt19937& rng, int edges) {
  if (edges < 2) edges = 2;
  int k = 2 + (int)(rng() % (unsigned)std::max(1, edges - 1));
  if (k > edges) k = edges;
  DecoratedGraph g = make_cycle(k, true);
  while ((int)g.edges.size() < edges) {
    auto faces = face_corners(g);
    for (int attempt = 0; attempt < 64; ++attempt) {
      const auto& cs = faces[rng() % faces.size()];
      if (cs.size() < 2) continue;
      size_t i = rng() % cs.size();
      size_t j = rng() % cs.size();
      if (i == j || cs[i].vertex == cs[j].vertex) continue;
      int id = g.fresh_edge_id();
      g.edges.push_back({id, cs[i].vertex, cs[j].vertex, {}, {}, {}, false});
      insert_after((*g.rotation)[cs[i].vertex], cs[i].arrive_edge, cs[i].arrive_end, {id, 0});
      insert_after((*g.rotation)[cs[j].vertex], cs[j].arrive_edge, cs[j].arrive_end, {id, 1});
      break;
    }
  }
  g.validate();
  return g;
}

DecoratedGraph decorated(const DecoratedGraph& g, std::mt19937& rng, const DecorationPlan& plan) {
  DecoratedGraph out = g;
  for (Edge& e : out.edges) {
    if (plan.colors) e.color = rng() % 2 ? Color::b : Color::w;
    if (plan.signs) e.sign = rng() % 2 ? 1 : -1;
    if (plan.chrom)
      e.chrom = Chrom{(int)(rng() % (unsigned)std::max(1, plan.chrom_indices)),
                      rng() % 2 ? Attr::d : Attr::l};
  }
  return out;
}

}  // namespace gp
