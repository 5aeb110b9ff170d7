#include "gp/setoid.hpp"

#include <algorithm>
#include <functional>

#include "gp/errors.hpp"
#include "json.hpp"

namespace gp {

namespace {

void require_element(const Setoid& s, const std::string& e) {
  if (!s.elements.count(e))
    throw UnknownElement("no element '" + e + "' in the setoid");
}

MultiPoly leaf_value(const Setoid& s) {
  if (s.trees.empty()) return MultiPoly(1);
  const std::set<std::string>& t = *s.trees.begin();
  int i = static_cast<int>(t.size());
  int j = static_cast<int>(s.elements.size() - t.size());
  return MultiPoly::monomial(1, {{"x", i}, {"y", j}});
}

MultiPoly chi_along(const Setoid& s, const std::vector<std::string>& order,
                    size_t from) {
  for (size_t i = from; i < order.size(); ++i) {
    if (!s.elements.count(order[i])) continue;
    if (classify(s, order[i]) != ElementClass::proper) continue;
    return chi_along(setoid_ops(s, order[i], SetoidOp::del), order, i + 1) +
           chi_along(setoid_ops(s, order[i], SetoidOp::contract), order, i + 1);
  }
  // Every remaining element was isthmus or loop at its turn and the
  // status is stable under later splits, so at most one tree survives.
  return leaf_value(s);
}

std::vector<std::string> sorted_elements(const Setoid& s) {
  return {s.elements.begin(), s.elements.end()};
}

}  // namespace

void Setoid::validate() const {
  for (const auto& t : trees)
    for (const auto& e : t)
      if (!elements.count(e))
        throw UnknownElement("tree uses unknown element '" + e + "'");
}

std::string Setoid::to_json_string() const {
  nlohmann::ordered_json j;
  j["elements"] = nlohmann::json::array();
  for (const auto& e : elements) j["elements"].push_back(e);
  j["trees"] = nlohmann::json::array();
  for (const auto& t : trees) {
    nlohmann::ordered_json jt = nlohmann::json::array();
    for (const auto& e : t) jt.push_back(e);
    j["trees"].push_back(jt);
  }
  return j.dump();
}

Setoid Setoid::from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("bad JSON: ") + ex.what());
  }
  if (!j.is_object() || !j.contains("elements") || !j.contains("trees"))
    throw ParseError("setoid JSON needs \"elements\" and \"trees\"");
  if (!j["elements"].is_array() || !j["trees"].is_array())
    throw ParseError("\"elements\" and \"trees\" must be arrays");
  Setoid s;
  try {
    for (const auto& je : j["elements"]) {
      std::string e = je.get<std::string>();
      if (!s.elements.insert(e).second)
        throw ParseError("duplicate element '" + e + "'");
    }
    for (const auto& jt : j["trees"]) {
      if (!jt.is_array()) throw ParseError("each tree must be an array");
      std::set<std::string> t;
      for (const auto& je : jt) {
        std::string e = je.get<std::string>();
        if (!s.elements.count(e))
          throw ParseError("tree uses unknown element '" + e + "'");
        t.insert(e);
      }
      s.trees.insert(t);  // duplicate trees collapse
    }
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("bad setoid JSON: ") + ex.what());
  }
  return s;
}

Setoid setoid_ops(const Setoid& s, const std::string& e, SetoidOp kind) {
  if (kind != SetoidOp::dual) require_element(s, e);
  Setoid out;
  switch (kind) {
    case SetoidOp::del:
      out.elements = s.elements;
      out.elements.erase(e);
      for (const auto& t : s.trees)
        if (!t.count(e)) out.trees.insert(t);
      break;
    case SetoidOp::contract:
      out.elements = s.elements;
      out.elements.erase(e);
      for (const auto& t : s.trees)
        if (t.count(e)) {
          std::set<std::string> r = t;
          r.erase(e);
          out.trees.insert(r);
        }
      break;
    case SetoidOp::dual: {
      size_t n = s.elements.size();
      if (n > 16) throw SizeCap("dual enumerates 2^|E| subsets; |E| <= 16");
      out.elements = s.elements;
      std::vector<std::string> el = sorted_elements(s);
      for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
        std::set<std::string> t;
        for (size_t i = 0; i < n; ++i)
          if (mask >> i & 1) t.insert(el[i]);
        if (!s.trees.count(t)) out.trees.insert(t);
      }
      break;
    }
  }
  return out;
}

ElementClass classify(const Setoid& s, const std::string& e) {
  require_element(s, e);
  bool in_all = true, in_none = true;
  for (const auto& t : s.trees) {
    if (t.count(e))
      in_none = false;
    else
      in_all = false;
  }
  if (in_none) return ElementClass::loop;
  if (in_all) return ElementClass::isthmus;
  return ElementClass::proper;
}

MultiPoly tutte_setoid(const Setoid& s, const std::vector<std::string>& order) {
  std::set<std::string> seen;
  for (const auto& e : order) {
    require_element(s, e);
    if (!seen.insert(e).second)
      throw PreconditionViolated("element order repeats '" + e + "'");
  }
  if (seen.size() != s.elements.size())
    throw PreconditionViolated("element order must cover every element");
  return chi_along(s, order, 0);
}

Setoid symmetrized(const Setoid& s) {
  size_t n = s.elements.size();
  if (n > 16) throw SizeCap("symmetrization enumerates 2^|E| subsets; |E| <= 16");
  std::set<size_t> sizes;
  for (const auto& t : s.trees) sizes.insert(t.size());
  Setoid out;
  out.elements = s.elements;
  std::vector<std::string> el = sorted_elements(s);
  for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
    std::set<std::string> t;
    for (size_t i = 0; i < n; ++i)
      if (mask >> i & 1) t.insert(el[i]);
    if (sizes.count(t.size())) out.trees.insert(t);
  }
  return out;
}

MultiPoly chi_sym(const Setoid& s) {
  return tutte_setoid(symmetrized(s), sorted_elements(s));
}

std::vector<std::pair<MultiPoly, long long>> ordering_census(const Setoid& s,
                                                             int cap) {
  if (static_cast<int>(s.elements.size()) > cap)
    throw TooManyOrderings("census covers |E|! orderings; |E| <= " +
                           std::to_string(cap));
  std::vector<std::string> order = sorted_elements(s);
  std::map<std::string, std::pair<MultiPoly, long long>> seen;
  do {
    MultiPoly chi = tutte_setoid(s, order);
    auto it = seen.emplace(chi.render(), std::make_pair(chi, 0ll)).first;
    it->second.second += 1;
  } while (std::next_permutation(order.begin(), order.end()));
  std::vector<std::pair<MultiPoly, long long>> out;
  out.reserve(seen.size());
  for (auto& [key, entry] : seen) out.push_back(entry);
  return out;
}

// Each exchange direction is demanded only where a swap candidate exists
// (some f outside t, resp. some e inside t); otherwise the all-tree or
// empty tree of a symmetric family like {{}, E} would fail vacuously and
// symmetric setoids would not all satisfy the property.
bool is_E_setoid(const Setoid& s) {
  for (const auto& t : s.trees) {
    if (t.size() < s.elements.size()) {
      for (const auto& e : t) {
        if (classify(s, e) == ElementClass::isthmus) continue;
        bool found = false;
        for (const auto& f : s.elements) {
          if (t.count(f)) continue;
          std::set<std::string> swapped = t;
          swapped.erase(e);
          swapped.insert(f);
          if (s.trees.count(swapped)) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
    if (t.empty()) continue;
    for (const auto& f : s.elements) {
      if (t.count(f)) continue;
      if (classify(s, f) == ElementClass::loop) continue;
      bool found = false;
      for (const auto& e : t) {
        std::set<std::string> swapped = t;
        swapped.erase(e);
        swapped.insert(f);
        if (s.trees.count(swapped)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

Setoid product(const Setoid& a, const Setoid& b) {
  for (const auto& e : a.elements)
    if (b.elements.count(e))
      throw PreconditionViolated("product factors share element '" + e + "'");
  Setoid out;
  out.elements = a.elements;
  out.elements.insert(b.elements.begin(), b.elements.end());
  for (const auto& ta : a.trees)
    for (const auto& tb : b.trees) {
      std::set<std::string> t = ta;
      t.insert(tb.begin(), tb.end());
      out.trees.insert(t);
    }
  return out;
}

Setoid sum(const Setoid& a, const Setoid& b) {
  Setoid out;
  out.elements = a.elements;
  out.elements.insert(b.elements.begin(), b.elements.end());
  out.trees = a.trees;
  out.trees.insert(b.trees.begin(), b.trees.end());
  return out;
}

bool is_2connected(const Setoid& s, int cap) {
  int n = static_cast<int>(s.elements.size());
  if (n > cap)
    throw SizeCap("2-connectivity searches 2^|E| bipartitions; |E| <= " +
                  std::to_string(cap));
  if (n < 2) return true;
  std::vector<std::string> el = sorted_elements(s);
  for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
    std::set<std::string> e1;
    for (int i = 0; i < n - 1; ++i)
      if (mask >> i & 1) e1.insert(el[i]);
    std::set<std::set<std::string>> p1, p2;
    for (const auto& t : s.trees) {
      std::set<std::string> a, b;
      for (const auto& e : t)
        (e1.count(e) ? a : b).insert(e);
      p1.insert(a);
      p2.insert(b);
    }
    std::set<std::set<std::string>> prod;
    for (const auto& a : p1)
      for (const auto& b : p2) {
        std::set<std::string> t = a;
        t.insert(b.begin(), b.end());
        prod.insert(t);
      }
    if (prod == s.trees) return false;
  }
  return true;
}

Setoid graph_to_setoid(const DecoratedGraph& g) {
  if (structure(g).p0 > 1)
    throw Disconnected("setoid translation needs a connected graph");
  SpanningTrees st = spanning_trees(g, static_cast<int>(g.edges.size()));
  Setoid s;
  for (const Edge& e : g.edges) s.elements.insert(std::to_string(e.id));
  for (const auto& tree : *st.trees) {
    std::set<std::string> t;
    for (int id : tree) t.insert(std::to_string(id));
    s.trees.insert(t);
  }
  return s;
}

Int GraphCombination::coeff(const std::string& code) const {
  auto it = terms.find(code);
  return it == terms.end() ? Int(0) : it->second.first;
}

std::map<std::string, Int> GraphCombination::coefficients() const {
  std::map<std::string, Int> out;
  for (const auto& [code, term] : terms) out.emplace(code, term.first);
  return out;
}

namespace {

void add_term(GraphCombination& out, const DecoratedGraph& g, const Int& c) {
  std::string code = canonical_code(g);
  auto it = out.terms.find(code);
  if (it == out.terms.end()) {
    out.terms.emplace(code, std::make_pair(c, g));
  } else {
    it->second.first += c;
    if (it->second.first == 0) out.terms.erase(it);
  }
}

DecoratedGraph abstract_copy(const DecoratedGraph& g) {
  DecoratedGraph out = g;
  out.rotation.reset();
  return out;
}

void require_classical(const DecoratedGraph& g, const char* what) {
  for (const Edge& e : g.edges)
    if (e.special)
      throw PreconditionViolated(std::string(what) +
                                 " expects a classical graph (no special edges)");
}

void check_pattern_cap(const DecoratedGraph& g) {
  if (g.edges.size() > 16)
    throw SizeCap("pattern expansion enumerates 2^|E| subsets; |E| <= 16");
}

DecoratedGraph all_special(const DecoratedGraph& g) {
  DecoratedGraph out = abstract_copy(g);
  for (Edge& e : out.edges) e.special = true;
  return out;
}

DecoratedGraph without_edges(const DecoratedGraph& g,
                             const std::set<int>& drop) {
  DecoratedGraph out;
  out.vertex_count = g.vertex_count;
  for (const Edge& e : g.edges)
    if (!drop.count(e.id)) out.edges.push_back(e);
  return out;
}

void resolve_to_pattern(const DecoratedGraph& g, GraphCombination& out) {
  for (const Edge& e : g.edges) {
    if (e.special) continue;
    DecoratedGraph sp = g;
    sp.edge_by_id(e.id).special = true;
    resolve_to_pattern(sp, out);
    resolve_to_pattern(edit(g, e.id, EditKind::del), out);
    return;
  }
  add_term(out, g, 1);
}

void resolve_to_classical(const DecoratedGraph& g, const Int& sign,
                          GraphCombination& out) {
  for (const Edge& e : g.edges) {
    if (!e.special) continue;
    DecoratedGraph cls = g;
    cls.edge_by_id(e.id).special = false;
    resolve_to_classical(cls, sign, out);
    resolve_to_classical(edit(g, e.id, EditKind::del), -sign, out);
    return;
  }
  add_term(out, g, sign);
}

MultiPoly hom_value(const DecoratedGraph& h, SpecializeHom hom) {
  int edge_count = static_cast<int>(h.edges.size());
  if (hom == SpecializeHom::matching) {
    std::vector<int> degree(h.vertex_count, 0);
    for (const Edge& e : h.edges) {
      if (e.is_loop()) return MultiPoly(0);
      degree[e.u] += 1;
      degree[e.v] += 1;
      if (degree[e.u] > 1 || degree[e.v] > 1) return MultiPoly(0);
    }
    return MultiPoly::monomial(1, {{"y", edge_count}});
  }
  StructureReport rep = structure(h);
  switch (hom) {
    case SpecializeHom::bracket_prime:
      return MultiPoly::monomial(
          1, {{"mu", rep.p0 + rep.p1}, {"A", edge_count}, {"B", -edge_count}});
    case SpecializeHom::traldi:
      return MultiPoly::monomial(1, {{"t", rep.p0}, {"z", rep.p1}});
    case SpecializeHom::z_dichromatic:
      return MultiPoly::monomial(1, {{"q", rep.p0}, {"v", edge_count}});
    default:
      return MultiPoly(0);  // unreachable
  }
}

}  // namespace

GraphCombination pattern_polynomial(const DecoratedGraph& g,
                                    PatternMethod method) {
  require_classical(g, "pattern expansion");
  check_pattern_cap(g);
  GraphCombination out;
  if (method == PatternMethod::resolution) {
    resolve_to_pattern(abstract_copy(g), out);
    return out;
  }
  std::vector<int> ids;
  for (const Edge& e : g.edges) ids.push_back(e.id);
  size_t m = ids.size();
  for (unsigned long long mask = 0; mask < (1ull << m); ++mask) {
    std::set<int> drop;
    for (size_t i = 0; i < m; ++i)
      if (!(mask >> i & 1)) drop.insert(ids[i]);
    add_term(out, all_special(without_edges(g, drop)), 1);
  }
  return out;
}

GraphCombination classical_expansion(const DecoratedGraph& g) {
  check_pattern_cap(g);
  GraphCombination out;
  resolve_to_classical(abstract_copy(g), 1, out);
  return out;
}

MultiPoly specialize(const DecoratedGraph& g, SpecializeHom hom) {
  GraphCombination pattern = pattern_polynomial(g, PatternMethod::counting);
  MultiPoly acc;
  for (const auto& [code, term] : pattern.terms)
    acc += MultiPoly(term.first) * hom_value(term.second, hom);
  return acc;
}

GraphTensor schmitt_coproduct(const DecoratedGraph& g) {
  require_classical(g, "coproduct");
  size_t m = g.edges.size();
  if (m > 4)
    throw SizeCap("coproduct enumerates 3^|E| ordered subset pairs; |E| <= 4");
  DecoratedGraph base = abstract_copy(g);
  std::vector<int> ids;
  for (const Edge& e : base.edges) ids.push_back(e.id);
  GraphTensor out;
  std::vector<int> state(m, 0);  // 0 = kept, 1 = in S1, 2 = in S2
  while (true) {
    std::set<int> s1, s2;
    for (size_t i = 0; i < m; ++i) {
      if (state[i] == 1) s1.insert(ids[i]);
      if (state[i] == 2) s2.insert(ids[i]);
    }
    DecoratedGraph left = without_edges(base, s2);
    DecoratedGraph right = without_edges(base, s1);
    std::string cl = canonical_code(left);
    std::string cr = canonical_code(right);
    out.terms[{cl, cr}] += 1;
    out.reps.emplace(cl, left);
    out.reps.emplace(cr, right);
    size_t i = 0;
    while (i < m && state[i] == 2) state[i++] = 0;
    if (i == m) break;
    state[i] += 1;
  }
  return out;
}

bool verify_intertwiner(const DecoratedGraph& g) {
  require_classical(g, "intertwiner check");
  if (g.edges.size() > 4)
    throw SizeCap("intertwiner check expands 3^|E| tensor terms; |E| <= 4");

  std::map<std::pair<std::string, std::string>, Int> lhs, rhs;
  GraphCombination phi_g = classical_expansion(all_special(g));
  for (const auto& [code, term] : phi_g.terms)
    lhs[{code, code}] += term.first;

  GraphTensor cop = schmitt_coproduct(g);
  std::map<std::string, GraphCombination> expanded;
  for (const auto& [codes, c] : cop.terms) {
    for (const std::string& code : {codes.first, codes.second})
      if (!expanded.count(code))
        expanded.emplace(code,
                         classical_expansion(all_special(cop.reps.at(code))));
    const GraphCombination& a = expanded.at(codes.first);
    const GraphCombination& b = expanded.at(codes.second);
    for (const auto& [ca, ta] : a.terms)
      for (const auto& [cb, tb] : b.terms)
        rhs[{ca, cb}] += c * ta.first * tb.first;
  }

  auto prune = [](std::map<std::pair<std::string, std::string>, Int>& m) {
    for (auto it = m.begin(); it != m.end();)
      it = (it->second == 0) ? m.erase(it) : std::next(it);
  };
  prune(lhs);
  prune(rhs);
  return lhs == rhs;
}

}  // namespace gp
