#include "gp/diagram.hpp"

#include <algorithm>
#include <functional>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace gp {

namespace {

using App = std::pair<int, int>;  // (crossing index, slot)

struct ArcUF {
  std::map<int, int> parent;
  void add(int x) { parent.emplace(x, x); }
  int find(int x) {
    int r = x;
    while (parent.at(r) != r) r = parent.at(r);
    while (parent.at(x) != x) {
      int nx = parent.at(x);
      parent[x] = r;
      x = nx;
    }
    return r;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
  }
};

struct Info {
  std::vector<int> arcs;                      // sorted labels
  std::map<int, std::vector<App>> apps;       // arc -> its two appearances
  std::map<int, App> head;                    // canonical head appearance
  std::vector<std::vector<int>> comps;        // canonical walk order per component
  std::map<int, int> comp_of;                 // arc -> component index
  std::vector<std::vector<std::pair<int, char>>> passages;  // canonical
  std::vector<int> over_in;                   // per crossing index: slot 1 or 3
  std::vector<int> under_comp;                // per crossing index
  std::vector<int> over_comp;
  std::vector<std::vector<App>> faces;        // arrival orbits
  std::map<App, int> face_of;
  std::vector<int> face_color;                // 0/1, reference face gets 0
  int reference_face = -1;
  int pieces = 0;
  std::vector<int> dirs;                      // effective direction per component
};

App other_app(const Info& info, int arc, const App& app) {
  const auto& v = info.apps.at(arc);
  return v[0] == app ? v[1] : v[0];
}

int exit_slot(int entry) {
  switch (entry) {
    case 0: return 2;
    case 1: return 3;
    case 3: return 1;
    default: return -1;
  }
}

// Walk one strand from `a0` entering its appearance `h`; false when the
// direction hits a slot-2 arrival (under-strand traversed backward).
bool try_walk(const std::vector<Crossing>& cr, const Info& info, int a0, App h,
              std::vector<int>& arcs, std::vector<std::pair<int, char>>& pass,
              std::vector<App>& heads) {
  arcs.clear();
  pass.clear();
  heads.clear();
  int cur_arc = a0;
  App cur = h;
  std::size_t guard = 0;
  while (true) {
    if (++guard > 4 * cr.size() + 4) throw MalformedPD("strand walk does not close");
    auto [c, s] = cur;
    if (s == 2) return false;
    arcs.push_back(cur_arc);
    pass.emplace_back(c, s == 0 ? 'U' : 'O');
    heads.push_back(cur);
    int t = exit_slot(s);
    int next_arc = cr[static_cast<std::size_t>(c)].arcs[static_cast<std::size_t>(t)];
    App arrival = other_app(info, next_arc, App{c, t});
    if (arrival == h) return true;
    cur_arc = next_arc;
    cur = arrival;
  }
}

Info analyze(const Diagram& d) {
  Info info;
  const auto& cr = d.crossings;
  int n = static_cast<int>(cr.size());
  {
    std::set<int> ids;
    for (const Crossing& c : cr)
      if (!ids.insert(c.id).second)
        throw MalformedPD("duplicate crossing id " + std::to_string(c.id));
  }
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) {
      int a = cr[static_cast<std::size_t>(c)].arcs[static_cast<std::size_t>(s)];
      if (a <= 0) throw MalformedPD("arc labels must be positive");
      info.apps[a].push_back(App{c, s});
    }
  for (const auto& [a, v] : info.apps) {
    if (v.size() != 2)
      throw MalformedPD("arc " + std::to_string(a) + " appears " +
                        std::to_string(v.size()) + " times (needs 2)");
    info.arcs.push_back(a);
  }

  // Canonical walk per component: start at the least unvisited arc, prefer
  // the lexicographically smaller appearance as head, fall back to the
  // other when the direction is forced by an under-passage.
  std::set<int> seen;
  for (int a0 : info.arcs) {
    if (seen.count(a0)) continue;
    std::vector<App> cands = info.apps.at(a0);
    std::sort(cands.begin(), cands.end());
    std::vector<int> arcs;
    std::vector<std::pair<int, char>> pass;
    std::vector<App> heads;
    bool ok = false;
    for (const App& h : cands)
      if (try_walk(cr, info, a0, h, arcs, pass, heads)) {
        ok = true;
        break;
      }
    if (!ok) throw MalformedPD("component of arc " + std::to_string(a0) +
                               " has conflicting under-strand directions");
    int ci = static_cast<int>(info.comps.size());
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      seen.insert(arcs[k]);
      info.comp_of[arcs[k]] = ci;
      info.head[arcs[k]] = heads[k];
    }
    info.comps.push_back(std::move(arcs));
    info.passages.push_back(std::move(pass));
  }

  info.over_in.assign(static_cast<std::size_t>(n), 0);
  info.under_comp.assign(static_cast<std::size_t>(n), -1);
  info.over_comp.assign(static_cast<std::size_t>(n), -1);
  for (std::size_t ci = 0; ci < info.comps.size(); ++ci)
    for (std::size_t k = 0; k < info.comps[ci].size(); ++k) {
      auto [c, s] = info.head.at(info.comps[ci][k]);
      auto cu = static_cast<std::size_t>(c);
      if (s == 0) {
        info.under_comp[cu] = static_cast<int>(ci);
      } else {
        info.over_in[cu] = s;
        info.over_comp[cu] = static_cast<int>(ci);
      }
    }
  for (int c = 0; c < n; ++c)
    if (info.under_comp[static_cast<std::size_t>(c)] < 0 ||
        info.over_comp[static_cast<std::size_t>(c)] < 0)
      throw MalformedPD("crossing " + std::to_string(cr[static_cast<std::size_t>(c)].id) +
                        " lacks an under or over passage");

  // Face orbits over all arrivals: leave a corner via the ccw-next slot.
  std::map<App, int> face_of;
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) {
      App start{c, s};
      if (face_of.count(start)) continue;
      int fi = static_cast<int>(info.faces.size());
      std::vector<App> orbit;
      App cur = start;
      do {
        face_of[cur] = fi;
        orbit.push_back(cur);
        int t = (cur.second + 1) % 4;
        int arc = cr[static_cast<std::size_t>(cur.first)]
                      .arcs[static_cast<std::size_t>(t)];
        cur = other_app(info, arc, App{cur.first, t});
      } while (cur != start);
      info.faces.push_back(std::move(orbit));
    }
  info.face_of = std::move(face_of);

  // Checkerboard 2-coloring across arcs.
  if (n > 0) {
    std::map<int, std::vector<int>> arc_sides;
    for (const auto& [app, fi] : info.face_of) {
      int t = (app.second + 1) % 4;
      int arc = cr[static_cast<std::size_t>(app.first)].arcs[static_cast<std::size_t>(t)];
      arc_sides[arc].push_back(fi);
    }
    info.face_color.assign(info.faces.size(), -1);
    std::vector<std::vector<int>> adj(info.faces.size());
    for (const auto& [arc, fs] : arc_sides) {
      adj[static_cast<std::size_t>(fs[0])].push_back(fs[1]);
      adj[static_cast<std::size_t>(fs[1])].push_back(fs[0]);
    }
    for (std::size_t f0 = 0; f0 < info.faces.size(); ++f0) {
      if (info.face_color[f0] >= 0) continue;
      info.face_color[f0] = 0;
      std::vector<int> stack{static_cast<int>(f0)};
      while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int g : adj[static_cast<std::size_t>(f)]) {
          if (info.face_color[static_cast<std::size_t>(g)] < 0) {
            info.face_color[static_cast<std::size_t>(g)] =
                1 - info.face_color[static_cast<std::size_t>(f)];
            stack.push_back(g);
          } else if (info.face_color[static_cast<std::size_t>(g)] ==
                     info.face_color[static_cast<std::size_t>(f)]) {
            throw MalformedPD("faces admit no checkerboard coloring");
          }
        }
      }
    }
    info.reference_face = info.face_of.at(info.head.at(info.arcs[0]));
    if (info.face_color[static_cast<std::size_t>(info.reference_face)] == 1)
      for (auto& c : info.face_color) c = 1 - c;
  }

  // Per-piece Euler count V - E + F = 2 certifies planarity.
  if (n > 0) {
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x)
        x = parent[static_cast<std::size_t>(x)] =
            parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      return x;
    };
    for (const auto& [a, v] : info.apps) {
      int r1 = find(v[0].first), r2 = find(v[1].first);
      if (r1 != r2) parent[static_cast<std::size_t>(std::max(r1, r2))] = std::min(r1, r2);
    }
    std::map<int, std::array<int, 3>> euler;  // piece root -> {V, E, F}
    for (int c = 0; c < n; ++c) euler[find(c)][0]++;
    for (const auto& [a, v] : info.apps) euler[find(v[0].first)][1]++;
    for (const auto& orbit : info.faces) euler[find(orbit[0].first)][2]++;
    info.pieces = static_cast<int>(euler.size());
    for (const auto& [root, vef] : euler)
      if (vef[0] - vef[1] + vef[2] != 2)
        throw MalformedPD("PD does not describe a plane diagram");
  }

  if (d.dirs.empty()) {
    info.dirs.assign(info.comps.size(), 1);
  } else {
    if (d.dirs.size() != info.comps.size())
      throw PreconditionViolated("dirs must list one direction per component");
    for (int x : d.dirs)
      if (x != 1 && x != -1) throw PreconditionViolated("dirs entries must be +1 or -1");
    info.dirs = d.dirs;
  }
  return info;
}

int true_sign(const Info& info, int c) {
  auto cu = static_cast<std::size_t>(c);
  int base = info.over_in[cu] == 3 ? 1 : -1;
  return base * info.dirs[static_cast<std::size_t>(info.under_comp[cu])] *
         info.dirs[static_cast<std::size_t>(info.over_comp[cu])];
}

void require_oriented(const Diagram& d, const char* what) {
  if (!d.oriented) throw Unoriented(std::string(what) + " needs an oriented diagram");
}

// Preserve each component's effective arc directions on a rebuilt diagram
// whose appearances moved by `app_map` (old appearance -> new appearance,
// identity when absent). Components are matched through shared arcs.
std::vector<int> carry_directions(
    const Info& old_info, const Diagram& nd, const Info& new_info,
    const std::function<App(App)>& app_map) {
  (void)nd;
  std::vector<int> dirs(new_info.comps.size(), 1);
  for (std::size_t ci = 0; ci < new_info.comps.size(); ++ci) {
    int arc = new_info.comps[ci][0];
    if (!old_info.apps.count(arc)) continue;
    std::size_t oc = static_cast<std::size_t>(old_info.comp_of.at(arc));
    App oh = old_info.head.at(arc);
    if (old_info.dirs[oc] == -1) oh = other_app(old_info, arc, oh);
    dirs[ci] = new_info.head.at(arc) == app_map(oh) ? 1 : -1;
  }
  return dirs;
}

Diagram switch_at(const Diagram& d, const std::set<int>& ids) {
  Info info = analyze(d);
  Diagram out = d;
  std::vector<int> rot(d.crossings.size(), 0);
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    if (!ids.count(d.crossings[c].id)) continue;
    int o = info.over_in[c];
    if (info.dirs[static_cast<std::size_t>(info.over_comp[c])] == -1) o = o == 1 ? 3 : 1;
    rot[c] = o;
    for (int s = 0; s < 4; ++s)
      out.crossings[c].arcs[static_cast<std::size_t>(s)] =
          d.crossings[c].arcs[static_cast<std::size_t>((s + o) % 4)];
  }
  out.dirs.clear();
  if (d.oriented) {
    Info ni = analyze(out);
    out.dirs = carry_directions(info, out, ni, [&](App a) {
      return App{a.first, (a.second - rot[static_cast<std::size_t>(a.first)] + 4) % 4};
    });
  }
  return out;
}

nlohmann::ordered_json parse_json(const std::string& text) {
  try {
    return nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("bad JSON: ") + ex.what());
  }
}

}  // namespace

Diagram ingest_pd(const std::vector<std::array<int, 4>>& quads) {
  Diagram d;
  for (std::size_t i = 0; i < quads.size(); ++i)
    d.crossings.push_back(Crossing{static_cast<int>(i), quads[i]});
  analyze(d);
  return d;
}

Diagram ingest_braid(int strands, const std::vector<int>& word) {
  if (strands < 1) throw BadBraidLetter("a braid needs at least one strand");
  for (int w : word) {
    int a = std::abs(w);
    if (a < 1 || a >= strands)
      throw BadBraidLetter("letter " + std::to_string(w) + " outside 1..." +
                           std::to_string(strands - 1));
  }
  int next = 1;
  std::vector<int> first(static_cast<std::size_t>(strands));
  std::vector<int> cur(static_cast<std::size_t>(strands));
  for (int i = 0; i < strands; ++i)
    first[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i)] = next++;

  // Strands run downward. Positive letter k: the strand entering at
  // position k+1 passes over; quads are ccw from the incoming under arc.
  Diagram d;
  std::vector<App> entries;  // true arrivals (crossing index, slot)
  for (std::size_t i = 0; i < word.size(); ++i) {
    int j = std::abs(word[i]) - 1;
    auto ju = static_cast<std::size_t>(j);
    int left = cur[ju], right = cur[ju + 1];
    int n_left = next++, n_right = next++;
    Crossing c;
    c.id = static_cast<int>(i);
    if (word[i] > 0) {
      c.arcs = {left, n_left, n_right, right};
      entries.push_back(App{c.id, 0});
      entries.push_back(App{c.id, 3});
    } else {
      c.arcs = {right, left, n_left, n_right};
      entries.push_back(App{c.id, 0});
      entries.push_back(App{c.id, 1});
    }
    d.crossings.push_back(c);
    cur[ju] = n_left;
    cur[ju + 1] = n_right;
  }

  // Closure: identify each final position with its starting arc; strands
  // never crossed become free circles.
  ArcUF uf;
  for (const Crossing& c : d.crossings)
    for (int a : c.arcs) uf.add(a);
  for (int i = 0; i < strands; ++i) {
    uf.add(first[static_cast<std::size_t>(i)]);
    uf.add(cur[static_cast<std::size_t>(i)]);
    uf.unite(first[static_cast<std::size_t>(i)], cur[static_cast<std::size_t>(i)]);
  }
  std::set<int> used;
  for (Crossing& c : d.crossings)
    for (int& a : c.arcs) {
      a = uf.find(a);
      used.insert(a);
    }
  std::set<int> circles;
  for (int i = 0; i < strands; ++i) {
    int r = uf.find(first[static_cast<std::size_t>(i)]);
    if (!used.count(r)) circles.insert(r);
  }
  d.extra_circles = static_cast<int>(circles.size());

  Info info = analyze(d);
  d.dirs.assign(info.comps.size(), 1);
  for (const App& e : entries) {
    int arc = d.crossings[static_cast<std::size_t>(e.first)]
                  .arcs[static_cast<std::size_t>(e.second)];
    d.dirs[static_cast<std::size_t>(info.comp_of.at(arc))] =
        info.head.at(arc) == e ? 1 : -1;
  }
  return d;
}

GraphDiagramCheck validate_graph(const DecoratedGraph& g) {
  GraphDiagramCheck r;
  auto note = [&](const std::string& s) { r.violations.push_back(s); };
  StructureReport st = structure(g);
  auto type_is = [&](const Edge& e, Color c, int s) {
    return e.color && e.sign && *e.color == c && *e.sign == s;
  };
  for (int id : st.isthmus_ids) {
    const Edge& e = g.edge_by_id(id);
    if (type_is(e, Color::b, 1)) note("isthmus " + std::to_string(id) + " of type b+");
    if (type_is(e, Color::w, -1)) note("isthmus " + std::to_string(id) + " of type w-");
  }
  for (int id : st.loop_ids) {
    const Edge& e = g.edge_by_id(id);
    if (type_is(e, Color::b, -1)) note("loop " + std::to_string(id) + " of type b-");
    if (type_is(e, Color::w, 1)) note("loop " + std::to_string(id) + " of type w+");
  }
  {
    std::vector<int> count(static_cast<std::size_t>(g.vertex_count), 0);
    std::vector<bool> unknown(static_cast<std::size_t>(g.vertex_count), false);
    for (const Edge& e : g.edges) {
      for (int v : {e.u, e.v}) {
        auto vu = static_cast<std::size_t>(v);
        if (!e.color || !e.sign) unknown[vu] = true;
        else if (type_is(e, Color::b, 1) || type_is(e, Color::w, -1)) count[vu]++;
      }
    }
    for (int v = 0; v < g.vertex_count; ++v)
      if (!unknown[static_cast<std::size_t>(v)] && count[static_cast<std::size_t>(v)] % 2)
        note("vertex " + std::to_string(v) + " meets an odd number of b+/w- ends");
  }
  if (g.rotation) {
    auto fd = faces_and_dual(g);
    for (std::size_t f = 0; f < fd.faces.size(); ++f) {
      int count = 0;
      bool unknown = false;
      for (const auto& [eid, fwd] : fd.faces[f]) {
        const Edge& e = g.edge_by_id(eid);
        if (!e.color || !e.sign) unknown = true;
        else if (type_is(e, Color::b, -1) || type_is(e, Color::w, 1)) count++;
      }
      if (!unknown && count % 2)
        note("face " + std::to_string(f) + " meets an odd number of b-/w+ passes");
    }
  }
  r.ok = r.violations.empty();
  return r;
}

Diagram ingest_graph(const DecoratedGraph& g) {
  if (!g.rotation) throw NoEmbedding("a matched diagram needs a rotation system");
  g.validate();
  for (const Edge& e : g.edges)
    if (!e.color) throw UncoloredEdge("edge " + std::to_string(e.id) + " has no color");
  {
    GraphDiagramCheck chk = validate_graph(g);
    if (!chk.ok) {
      std::string msg;
      for (const auto& v : chk.violations) msg += (msg.empty() ? "" : "; ") + v;
      throw GraphNotRealizable(msg);
    }
  }
  const Rotation& rot = *g.rotation;

  // One arc between consecutive rotation ends around each vertex.
  int next = 1;
  int extra = 0;
  std::vector<std::vector<int>> arc_at(static_cast<std::size_t>(g.vertex_count));
  for (int v = 0; v < g.vertex_count; ++v) {
    std::size_t deg = rot[static_cast<std::size_t>(v)].size();
    if (deg == 0) {
      extra++;
      continue;
    }
    for (std::size_t i = 0; i < deg; ++i) arc_at[static_cast<std::size_t>(v)].push_back(next++);
  }

  // Crossing role layout looking from end 0 toward end 1: NW/SW on the
  // end-0 side, SE/NE on the end-1 side; diag1 = NW-SE carries the
  // strand parallel to the u->v picture, diag2 = SW-NE the other one.
  enum Role { NW = 0, SW = 1, SE = 2, NE = 3 };
  struct Cross {
    int eid;
    std::array<int, 4> arc;  // by Role
    Color col;
    std::optional<int> sign;
  };
  std::map<int, std::pair<std::pair<int, int>, std::pair<int, int>>> end_pos;
  for (int v = 0; v < g.vertex_count; ++v)
    for (std::size_t i = 0; i < rot[static_cast<std::size_t>(v)].size(); ++i) {
      const EndRef& er = rot[static_cast<std::size_t>(v)][i];
      auto& slot = end_pos[er.edge];
      (er.end == 0 ? slot.first : slot.second) = {v, static_cast<int>(i)};
    }
  std::vector<Cross> cross;
  std::map<int, int> cross_of_edge;
  for (const Edge& e : g.edges) {
    auto [p0, p1] = end_pos.at(e.id);
    auto [u, i0] = p0;
    auto [v, j1] = p1;
    int du = static_cast<int>(rot[static_cast<std::size_t>(u)].size());
    int dv = static_cast<int>(rot[static_cast<std::size_t>(v)].size());
    Cross c;
    c.eid = e.id;
    c.arc[NW] = arc_at[static_cast<std::size_t>(u)][static_cast<std::size_t>(i0)];
    c.arc[SW] = arc_at[static_cast<std::size_t>(u)][static_cast<std::size_t>((i0 + du - 1) % du)];
    c.arc[SE] = arc_at[static_cast<std::size_t>(v)][static_cast<std::size_t>(j1)];
    c.arc[NE] = arc_at[static_cast<std::size_t>(v)][static_cast<std::size_t>((j1 + dv - 1) % dv)];
    c.col = *e.color;
    c.sign = e.sign;
    cross_of_edge[e.id] = static_cast<int>(cross.size());
    cross.push_back(c);
  }

  // Strand components of the medial: each arc attaches to exactly two
  // (crossing, role) ports; the strand leaves through the diagonal port.
  std::map<int, std::vector<std::pair<int, int>>> att;
  for (std::size_t k = 0; k < cross.size(); ++k)
    for (int r = 0; r < 4; ++r) att[cross[k].arc[static_cast<std::size_t>(r)]].push_back(
        {static_cast<int>(k), r});
  auto partner = [](int r) { return r == NW ? SE : r == SE ? NW : r == SW ? NE : SW; };
  std::map<int, int> comp_of;
  // Flow through a crossing: +1 when diag1 runs NW->SE (resp. diag2
  // SW->NE) under the canonical traversal of its component.
  std::vector<std::array<int, 2>> flow(cross.size(), {0, 0});
  std::vector<std::array<int, 2>> strand_comp(cross.size(), {-1, -1});
  int comp_count = 0;
  for (const auto& [a0, ports] : att) {
    if (comp_of.count(a0)) continue;
    int ci = comp_count++;
    int arc = a0;
    std::pair<int, int> ahead = ports[0];
    do {
      comp_of[arc] = ci;
      auto [k, r] = ahead;
      int diag = (r == NW || r == SE) ? 0 : 1;
      flow[static_cast<std::size_t>(k)][static_cast<std::size_t>(diag)] =
          (r == NW || r == SW) ? 1 : -1;
      strand_comp[static_cast<std::size_t>(k)][static_cast<std::size_t>(diag)] = ci;
      int pr = partner(r);
      int next_arc = cross[static_cast<std::size_t>(k)].arc[static_cast<std::size_t>(pr)];
      const auto& np = att.at(next_arc);
      ahead = np[0] == std::make_pair(k, pr) ? np[1] : np[0];
      arc = next_arc;
    } while (arc != a0 || ahead != ports[0]);
  }

  // Signs: a b edge is positive exactly when its two strands run the same
  // way along the edge, a w edge when they run opposite ways. Search the
  // 2^components orientation assignments for one matching every sign.
  if (comp_count > 20) throw SizeCap("orientation search over " +
                                     std::to_string(comp_count) + " strands");
  std::vector<int> dir(static_cast<std::size_t>(comp_count), 1);
  bool found = false;
  for (long long mask = 0; mask < (1LL << comp_count); ++mask) {
    for (int i = 0; i < comp_count; ++i)
      dir[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
    bool ok = true;
    for (std::size_t k = 0; k < cross.size() && ok; ++k) {
      if (!cross[k].sign) continue;
      int f1 = flow[k][0] * dir[static_cast<std::size_t>(strand_comp[k][0])];
      int f2 = flow[k][1] * dir[static_cast<std::size_t>(strand_comp[k][1])];
      int s = cross[k].col == Color::b ? f1 * f2 : -f1 * f2;
      if (s != *cross[k].sign) ok = false;
    }
    if (ok) {
      found = true;
      break;
    }
  }
  if (!found)
    throw GraphNotRealizable("no strand orientation realizes the requested signs");

  Diagram d;
  d.extra_circles = extra;
  std::vector<App> entries;
  for (std::size_t k = 0; k < cross.size(); ++k) {
    const Cross& c = cross[k];
    int f1 = flow[k][0] * dir[static_cast<std::size_t>(strand_comp[k][0])];
    int f2 = flow[k][1] * dir[static_cast<std::size_t>(strand_comp[k][1])];
    // ccw role cycles: from SW: SW,SE,NE,NW; from NE: NE,NW,SW,SE;
    // from NW: NW,SW,SE,NE; from SE: SE,NE,NW,SW.
    std::array<int, 4> order{};
    int over_entry_role;
    if (c.col == Color::b) {
      order = f2 == 1 ? std::array<int, 4>{SW, SE, NE, NW}
                      : std::array<int, 4>{NE, NW, SW, SE};
      over_entry_role = f1 == 1 ? NW : SE;
    } else {
      order = f1 == 1 ? std::array<int, 4>{NW, SW, SE, NE}
                      : std::array<int, 4>{SE, NE, NW, SW};
      over_entry_role = f2 == 1 ? SW : NE;
    }
    Crossing out;
    out.id = c.eid;
    for (int s = 0; s < 4; ++s)
      out.arcs[static_cast<std::size_t>(s)] =
          c.arc[static_cast<std::size_t>(order[static_cast<std::size_t>(s)])];
    int over_slot = 0;
    for (int s = 0; s < 4; ++s)
      if (order[static_cast<std::size_t>(s)] == over_entry_role) over_slot = s;
    entries.push_back(App{static_cast<int>(k), 0});
    entries.push_back(App{static_cast<int>(k), over_slot});
    d.crossings.push_back(out);
  }

  Info info = analyze(d);
  d.dirs.assign(info.comps.size(), 1);
  for (const App& e : entries) {
    int arc = d.crossings[static_cast<std::size_t>(e.first)]
                  .arcs[static_cast<std::size_t>(e.second)];
    d.dirs[static_cast<std::size_t>(info.comp_of.at(arc))] =
        info.head.at(arc) == e ? 1 : -1;
  }
  return d;
}

Diagram ingest(const std::string& json_text) {
  nlohmann::ordered_json j = parse_json(json_text);
  if (!j.is_object()) throw ParseError("diagram JSON must be an object");
  if (j.contains("pd")) {
    if (!j["pd"].is_array()) throw ParseError("\"pd\" must be an array of quads");
    std::vector<std::array<int, 4>> quads;
    for (const auto& q : j["pd"]) {
      if (!q.is_array() || q.size() != 4) throw ParseError("each PD entry needs 4 arcs");
      std::array<int, 4> a{};
      for (int s = 0; s < 4; ++s) {
        if (!q[static_cast<std::size_t>(s)].is_number_integer())
          throw ParseError("PD arc labels must be integers");
        a[static_cast<std::size_t>(s)] = q[static_cast<std::size_t>(s)].get<int>();
      }
      quads.push_back(a);
    }
    Diagram d = ingest_pd(quads);
    if (j.contains("circles")) {
      if (!j["circles"].is_number_integer() || j["circles"].get<int>() < 0)
        throw ParseError("\"circles\" must be a nonnegative integer");
      d.extra_circles = j["circles"].get<int>();
    }
    if (j.contains("orient")) {
      if (j["orient"].is_null()) {
        d.oriented = false;
      } else {
        if (!j["orient"].is_array()) throw ParseError("\"orient\" must be a list or null");
        std::vector<int> dirs;
        for (const auto& x : j["orient"]) {
          if (!x.is_number_integer() || std::abs(x.get<int>()) != 1)
            throw ParseError("\"orient\" entries must be +1 or -1");
          dirs.push_back(x.get<int>());
        }
        Info info = analyze(d);
        if (dirs.size() != info.comps.size())
          throw MalformedPD("orient lists " + std::to_string(dirs.size()) +
                            " directions for " + std::to_string(info.comps.size()) +
                            " strands");
        d.dirs = std::move(dirs);
      }
    }
    return d;
  }
  if (j.contains("braid")) {
    const auto& b = j["braid"];
    if (!b.is_object() || !b.contains("strands") || !b.contains("word"))
      throw ParseError("\"braid\" needs \"strands\" and \"word\"");
    if (!b["strands"].is_number_integer()) throw ParseError("\"strands\" must be an integer");
    if (!b["word"].is_array()) throw ParseError("\"word\" must be an array");
    std::vector<int> word;
    for (const auto& x : b["word"]) {
      if (!x.is_number_integer()) throw ParseError("braid letters must be integers");
      word.push_back(x.get<int>());
    }
    return ingest_braid(b["strands"].get<int>(), word);
  }
  if (j.contains("graph"))
    return ingest_graph(DecoratedGraph::from_json_string(j["graph"].dump()));
  throw ParseError("diagram JSON needs \"pd\", \"braid\" or \"graph\"");
}

std::string Diagram::to_json_string() const {
  nlohmann::ordered_json j;
  j["pd"] = nlohmann::ordered_json::array();
  for (const Crossing& c : crossings)
    j["pd"].push_back({c.arcs[0], c.arcs[1], c.arcs[2], c.arcs[3]});
  if (extra_circles > 0) j["circles"] = extra_circles;
  if (!oriented) {
    j["orient"] = nullptr;
  } else if (std::any_of(dirs.begin(), dirs.end(), [](int x) { return x == -1; })) {
    j["orient"] = dirs;
  }
  return j.dump();
}

Diagram Diagram::from_json_string(const std::string& text) { return ingest(text); }

int crossing_count(const Diagram& d) { return static_cast<int>(d.crossings.size()); }

int component_count(const Diagram& d) {
  return static_cast<int>(analyze(d).comps.size()) + d.extra_circles;
}

std::vector<std::vector<int>> component_arcs(const Diagram& d) {
  Info info = analyze(d);
  std::vector<std::vector<int>> out;
  for (std::size_t ci = 0; ci < info.comps.size(); ++ci) {
    std::vector<int> arcs = info.comps[ci];
    if (info.dirs[ci] == -1 && arcs.size() > 1)
      std::reverse(arcs.begin() + 1, arcs.end());
    out.push_back(std::move(arcs));
  }
  return out;
}

std::vector<std::vector<std::pair<int, char>>> strand_passages(const Diagram& d) {
  Info info = analyze(d);
  std::vector<std::vector<std::pair<int, char>>> out;
  for (std::size_t ci = 0; ci < info.comps.size(); ++ci) {
    if (info.dirs[ci] == 1) {
      auto pass = info.passages[ci];
      for (auto& [c, t] : pass) c = d.crossings[static_cast<std::size_t>(c)].id;
      out.push_back(std::move(pass));
      continue;
    }
    std::vector<int> arcs = info.comps[ci];
    if (arcs.size() > 1) std::reverse(arcs.begin() + 1, arcs.end());
    std::vector<std::pair<int, char>> pass;
    for (int a : arcs) {
      App tail = other_app(info, a, info.head.at(a));
      char t = (tail.second == 0 || tail.second == 2) ? 'U' : 'O';
      pass.emplace_back(d.crossings[static_cast<std::size_t>(tail.first)].id, t);
    }
    out.push_back(std::move(pass));
  }
  return out;
}

std::vector<int> crossing_signs(const Diagram& d) {
  require_oriented(d, "crossing signs");
  Info info = analyze(d);
  std::vector<int> out;
  for (std::size_t c = 0; c < d.crossings.size(); ++c)
    out.push_back(true_sign(info, static_cast<int>(c)));
  return out;
}

int writhe(const Diagram& d) {
  auto s = crossing_signs(d);
  return std::accumulate(s.begin(), s.end(), 0);
}

DecoratedGraph to_graph(const Diagram& d, Shading shading) {
  Info info = analyze(d);
  int total = info.pieces + d.extra_circles;
  if (total > 1) throw Disconnected("checkerboard graph needs a connected diagram");
  DecoratedGraph g;
  if (d.crossings.empty()) {
    g.vertex_count = 1;
    g.rotation = Rotation(1);
    return g;
  }
  int black = shading == Shading::black_left_of_reference ? 0 : 1;
  std::map<int, int> vertex_of;
  for (std::size_t f = 0; f < info.faces.size(); ++f)
    if (info.face_color[f] == black) {
      int v = static_cast<int>(vertex_of.size());
      vertex_of[static_cast<int>(f)] = v;
    }
  g.vertex_count = static_cast<int>(vertex_of.size());
  std::vector<int> signs;
  if (d.oriented)
    for (std::size_t c = 0; c < d.crossings.size(); ++c)
      signs.push_back(true_sign(info, static_cast<int>(c)));
  std::map<int, std::pair<int, int>> end_slots;  // crossing index -> slots of ends 0/1
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    int ic = static_cast<int>(c);
    Edge e;
    e.id = d.crossings[c].id;
    int f1 = info.face_of.at(App{ic, 1});
    if (info.face_color[static_cast<std::size_t>(f1)] == black) {
      e.color = Color::b;
      e.u = vertex_of.at(f1);
      e.v = vertex_of.at(info.face_of.at(App{ic, 3}));
      end_slots[ic] = {1, 3};
    } else {
      e.color = Color::w;
      e.u = vertex_of.at(info.face_of.at(App{ic, 0}));
      e.v = vertex_of.at(info.face_of.at(App{ic, 2}));
      end_slots[ic] = {0, 2};
    }
    if (d.oriented) e.sign = signs[c];
    g.edges.push_back(e);
  }
  Rotation rot(static_cast<std::size_t>(g.vertex_count));
  for (const auto& [f, v] : vertex_of) {
    for (const App& app : info.faces[static_cast<std::size_t>(f)]) {
      auto [s0, s1] = end_slots.at(app.first);
      int end = app.second == s0 ? 0 : 1;
      rot[static_cast<std::size_t>(v)].push_back(
          EndRef{d.crossings[static_cast<std::size_t>(app.first)].id, end});
    }
  }
  g.rotation = std::move(rot);
  return g;
}

ResolveReport resolve(const Diagram& d, const KauffmanState& s) {
  ArcUF uf;
  for (const Crossing& c : d.crossings)
    for (int a : c.arcs) uf.add(a);
  for (const Crossing& c : d.crossings) {
    auto it = s.marker.find(c.id);
    if (it == s.marker.end())
      throw PreconditionViolated("state lacks a marker for crossing " +
                                 std::to_string(c.id));
    if (it->second != 1 && it->second != -1)
      throw PreconditionViolated("markers must be +1 or -1");
    if (it->second == 1) {
      uf.unite(c.arcs[0], c.arcs[1]);
      uf.unite(c.arcs[2], c.arcs[3]);
    } else {
      uf.unite(c.arcs[0], c.arcs[3]);
      uf.unite(c.arcs[1], c.arcs[2]);
    }
  }
  ResolveReport r;
  std::set<int> roots;
  for (const auto& [a, p] : uf.parent) roots.insert(uf.find(a));
  r.circle_count = static_cast<int>(roots.size()) + d.extra_circles;
  for (const Crossing& c : d.crossings) {
    int m = s.marker.at(c.id);
    bool touch = m == 1 ? uf.find(c.arcs[0]) == uf.find(c.arcs[2])
                        : uf.find(c.arcs[0]) == uf.find(c.arcs[1]);
    r.self_touch[c.id] = touch;
  }
  return r;
}

AdequacyReport adequacy(const Diagram& d) {
  if (d.extra_circles > 0 || d.crossings.empty())
    throw NotApplicable("adequacy needs every component to pass a crossing");
  KauffmanState plus, minus;
  for (const Crossing& c : d.crossings) {
    plus.marker[c.id] = 1;
    minus.marker[c.id] = -1;
  }
  ResolveReport rp = resolve(d, plus);
  ResolveReport rm = resolve(d, minus);
  AdequacyReport a;
  a.s_plus_circles = rp.circle_count;
  a.s_minus_circles = rm.circle_count;
  a.plus = std::none_of(rp.self_touch.begin(), rp.self_touch.end(),
                        [](const auto& kv) { return kv.second; });
  a.minus = std::none_of(rm.self_touch.begin(), rm.self_touch.end(),
                         [](const auto& kv) { return kv.second; });
  return a;
}

SeifertReport seifert(const Diagram& d) {
  require_oriented(d, "the Seifert state");
  Info info = analyze(d);
  ArcUF uf;
  for (const Crossing& c : d.crossings)
    for (int a : c.arcs) uf.add(a);
  std::vector<int> sign(d.crossings.size());
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    sign[c] = true_sign(info, static_cast<int>(c));
    const auto& q = d.crossings[c].arcs;
    if (sign[c] == 1) {
      uf.unite(q[0], q[1]);
      uf.unite(q[2], q[3]);
    } else {
      uf.unite(q[0], q[3]);
      uf.unite(q[1], q[2]);
    }
  }
  std::map<int, int> circle_of;  // root -> vertex
  for (const auto& [a, p] : uf.parent) {
    int r = uf.find(a);
    if (!circle_of.count(r)) {
      int v = static_cast<int>(circle_of.size());
      circle_of[r] = v;
    }
  }
  SeifertReport rep;
  rep.s = static_cast<int>(circle_of.size()) + d.extra_circles;
  rep.seifert_graph.vertex_count = rep.s;
  std::set<std::pair<int, int>> plus_pairs, minus_pairs;
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    const auto& q = d.crossings[c].arcs;
    int u = circle_of.at(uf.find(q[0]));
    int v = circle_of.at(uf.find(sign[c] == 1 ? q[2] : q[1]));
    Edge e;
    e.id = d.crossings[c].id;
    e.u = u;
    e.v = v;
    e.sign = sign[c];
    rep.seifert_graph.edges.push_back(e);
    auto pr = std::minmax(u, v);
    (sign[c] == 1 ? plus_pairs : minus_pairs).insert({pr.first, pr.second});
  }
  rep.d_plus = static_cast<int>(plus_pairs.size());
  rep.d_minus = static_cast<int>(minus_pairs.size());
  std::set<std::pair<int, int>> all_pairs = plus_pairs;
  all_pairs.insert(minus_pairs.begin(), minus_pairs.end());
  bool mixed = false;
  for (const auto& p : plus_pairs)
    if (minus_pairs.count(p)) mixed = true;
  std::vector<int> parent(static_cast<std::size_t>(rep.s));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  int merges = 0;
  for (const auto& [u, v] : all_pairs) {
    int ru = find(u), rv = find(v);
    if (ru != rv) {
      parent[static_cast<std::size_t>(std::max(ru, rv))] = std::min(ru, rv);
      merges++;
    }
  }
  bool connected = merges == rep.s - 1;
  rep.simplified_tree_like =
      !mixed && connected && static_cast<int>(all_pairs.size()) == rep.s - 1;
  return rep;
}

DiagramPredicates predicates(const Diagram& d) {
  Info info = analyze(d);
  DiagramPredicates p;
  p.connected = info.pieces + d.extra_circles <= 1;
  p.alternating = true;
  for (const auto& pass : info.passages) {
    std::size_t m = pass.size();
    for (std::size_t k = 0; k < m; ++k)
      if (pass[k].second == pass[(k + 1) % m].second) p.alternating = false;
  }
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    int ic = static_cast<int>(c);
    if (info.face_of.at(App{ic, 0}) == info.face_of.at(App{ic, 2}) ||
        info.face_of.at(App{ic, 1}) == info.face_of.at(App{ic, 3}))
      p.nugatory_ids.push_back(d.crossings[c].id);
  }
  p.reduced = p.nugatory_ids.empty();
  p.prime = p.connected && !d.crossings.empty() && p.reduced &&
            structure(to_graph(d)).is_2connected;
  return p;
}

BridgeReport bridges(const Diagram& d) {
  Info info = analyze(d);
  BridgeReport r;
  for (const auto& pass : info.passages) {
    int m = static_cast<int>(pass.size());
    bool any_under = std::any_of(pass.begin(), pass.end(),
                                 [](const auto& p) { return p.second == 'U'; });
    if (!any_under) {
      r.b = std::max(r.b, m);
    } else {
      int run = 0;
      for (int k = 0; k < 2 * m; ++k) {
        if (pass[static_cast<std::size_t>(k % m)].second == 'O') {
          run = std::min(run + 1, m);
          r.b = std::max(r.b, run);
        } else {
          run = 0;
        }
      }
    }
    for (int start = 0; start < m; ++start) {
      std::set<int> overs;
      for (int j = 0; j < m; ++j) {
        const auto& [c, t] = pass[static_cast<std::size_t>((start + j) % m)];
        if (t == 'O') {
          overs.insert(c);
        } else if (!overs.count(c)) {
          break;
        }
      }
      r.b_generalized = std::max(r.b_generalized, static_cast<int>(overs.size()));
    }
  }
  return r;
}

LinkingReport linking(const Diagram& d) {
  require_oriented(d, "linking numbers");
  Info info = analyze(d);
  LinkingReport r;
  int comps = static_cast<int>(info.comps.size()) + d.extra_circles;
  std::vector<int> inter(static_cast<std::size_t>(comps), 0);
  int inter_total = 0;
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    int s = true_sign(info, static_cast<int>(c));
    int uc = info.under_comp[c], oc = info.over_comp[c];
    if (uc == oc) {
      r.sw += s;
    } else {
      inter[static_cast<std::size_t>(uc)] += s;
      inter[static_cast<std::size_t>(oc)] += s;
      inter_total += s;
    }
  }
  for (int x : inter) {
    if (x % 2) throw MalformedPD("odd crossing parity between strands");
    r.per_component.push_back(x / 2);
  }
  if (inter_total % 2) throw MalformedPD("odd crossing parity between strands");
  r.total = inter_total / 2;
  return r;
}

Diagram transform(const Diagram& d, DiagramTransform kind, int component) {
  if (kind == DiagramTransform::mirror) {
    std::set<int> ids;
    for (const Crossing& c : d.crossings) ids.insert(c.id);
    return switch_at(d, ids);
  }
  require_oriented(d, "a component reversal");
  Info info = analyze(d);
  Diagram out = d;
  out.dirs = info.dirs;
  int comps = static_cast<int>(info.comps.size()) + d.extra_circles;
  if (kind == DiagramTransform::reverse_component) {
    if (component < 0 || component >= comps)
      throw PreconditionViolated("component index out of range");
    if (component < static_cast<int>(info.comps.size()))
      out.dirs[static_cast<std::size_t>(component)] *= -1;
  } else {
    for (int& x : out.dirs) x *= -1;
  }
  return out;
}

// Surgery against the strand directions reverses a stretch of a curve,
// leaving under-passes that enter at slot 2. Walk the curves with free
// direction choices and half-rotate every such quad; a half-rotation
// keeps the ccw corner order, the under/over split and the faces.
void normalize_under_entries(Diagram& d) {
  const int n = static_cast<int>(d.crossings.size());
  std::map<int, std::vector<App>> apps;
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s)
      apps[d.crossings[static_cast<std::size_t>(c)].arcs[static_cast<std::size_t>(s)]]
          .push_back(App{c, s});
  std::set<App> arrivals;
  std::set<int> seen;
  for (const auto& [a0, v] : apps) {
    if (seen.count(a0)) continue;
    int cur_arc = a0;
    App cur = v[0];
    while (!seen.count(cur_arc)) {
      seen.insert(cur_arc);
      arrivals.insert(cur);
      const auto [c, s] = cur;
      const int t = s == 0 ? 2 : s == 2 ? 0 : s == 1 ? 3 : 1;
      const int next =
          d.crossings[static_cast<std::size_t>(c)].arcs[static_cast<std::size_t>(t)];
      const auto& na = apps.at(next);
      cur = na[0] == App{c, t} ? na[1] : na[0];
      cur_arc = next;
    }
  }
  for (int c = 0; c < n; ++c)
    if (arrivals.count(App{c, 2})) {
      auto& q = d.crossings[static_cast<std::size_t>(c)].arcs;
      std::swap(q[0], q[2]);
      std::swap(q[1], q[3]);
    }
}

Diagram smooth_crossing(const Diagram& d, int crossing_id, int marker,
                        bool keep_orientation) {
  if (marker != 1 && marker != -1)
    throw PreconditionViolated("smoothing marker must be +1 or -1");
  std::size_t target = d.crossings.size();
  for (std::size_t c = 0; c < d.crossings.size(); ++c)
    if (d.crossings[c].id == crossing_id) target = c;
  if (target == d.crossings.size())
    throw PreconditionViolated("no crossing with id " + std::to_string(crossing_id));
  Info info = analyze(d);
  if (keep_orientation) {
    require_oriented(d, "an oriented smoothing");
    if (true_sign(info, static_cast<int>(target)) != marker)
      throw PreconditionViolated("oriented smoothing needs marker == sign");
  }
  const auto& q = d.crossings[target].arcs;
  ArcUF uf;
  for (const Crossing& c : d.crossings)
    for (int a : c.arcs) uf.add(a);
  if (marker == 1) {
    uf.unite(q[0], q[1]);
    uf.unite(q[2], q[3]);
  } else {
    uf.unite(q[0], q[3]);
    uf.unite(q[1], q[2]);
  }
  Diagram out;
  out.extra_circles = d.extra_circles;
  std::set<int> kept_labels;
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    if (c == target) continue;
    Crossing nc = d.crossings[c];
    for (int& a : nc.arcs) {
      a = uf.find(a);
      kept_labels.insert(a);
    }
    out.crossings.push_back(nc);
  }
  std::set<int> local;
  for (int a : q) local.insert(uf.find(a));
  for (int r : local)
    if (!kept_labels.count(r)) out.extra_circles++;
  if (!keep_orientation) {
    out.oriented = false;
    normalize_under_entries(out);
    return out;
  }
  Info ni = analyze(out);
  out.dirs.assign(ni.comps.size(), 1);
  std::map<int, std::size_t> new_index;  // crossing id -> old index
  for (std::size_t c = 0; c < d.crossings.size(); ++c)
    if (c != target) new_index[d.crossings[c].id] = c;
  for (std::size_t ci = 0; ci < ni.comps.size(); ++ci) {
    App h = ni.head.at(ni.comps[ci][0]);
    std::size_t oc = new_index.at(out.crossings[static_cast<std::size_t>(h.first)].id);
    int old_arc = d.crossings[oc].arcs[static_cast<std::size_t>(h.second)];
    App old_h = info.head.at(old_arc);
    if (info.dirs[static_cast<std::size_t>(info.comp_of.at(old_arc))] == -1)
      old_h = other_app(info, old_arc, old_h);
    out.dirs[ci] = (old_h == App{static_cast<int>(oc), h.second}) ? 1 : -1;
  }
  return out;
}

Diagram switch_crossing(const Diagram& d, int crossing_id) {
  bool present = false;
  for (const Crossing& c : d.crossings)
    if (c.id == crossing_id) present = true;
  if (!present)
    throw PreconditionViolated("no crossing with id " + std::to_string(crossing_id));
  return switch_at(d, {crossing_id});
}

Diagram component_diagram(const Diagram& d, int component) {
  Info info = analyze(d);
  const int strand_comps = static_cast<int>(info.comps.size());
  if (component < 0 || component >= strand_comps + d.extra_circles)
    throw PreconditionViolated("no component with index " + std::to_string(component));

  Diagram out;
  out.oriented = d.oriented;
  if (component >= strand_comps) {
    out.extra_circles = 1;
    return out;
  }

  // Passing the kept strand straight through an erased crossing merges the
  // two arcs on its strand; travel directions are untouched, so the PD
  // stays well-formed without any quad rotation.
  std::map<int, int> parent;
  for (int a : info.comps[static_cast<std::size_t>(component)]) parent[a] = a;
  auto find = [&parent](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };

  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < d.crossings.size(); ++k) {
    const int cu = info.under_comp[k];
    const int co = info.over_comp[k];
    const auto& q = d.crossings[k].arcs;
    if (cu == component && co == component) {
      kept.push_back(k);
    } else if (cu == component) {
      unite(q[0], q[2]);
    } else if (co == component) {
      unite(q[1], q[3]);
    }
  }

  if (kept.empty()) {
    out.extra_circles = 1;
    return out;
  }
  for (std::size_t k : kept) {
    Crossing c = d.crossings[k];
    for (int s = 0; s < 4; ++s)
      c.arcs[static_cast<std::size_t>(s)] = find(c.arcs[static_cast<std::size_t>(s)]);
    out.crossings.push_back(c);
  }
  if (d.oriented) {
    const int dir = d.dirs.empty()
                        ? 1
                        : d.dirs[static_cast<std::size_t>(component)];
    out.dirs.assign(1, dir);
  }
  analyze(out);
  return out;
}

}  // namespace gp
