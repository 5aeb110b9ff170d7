#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

#include "doctest.h"
#include "gp/corpus.hpp"
#include "gp/errors.hpp"
#include "gp/graph.hpp"
#include "gp/graphpoly.hpp"
#include "gp/poly.hpp"
#include "gp/setoid.hpp"

using namespace gp;

namespace {

MultiPoly X() { return MultiPoly::var("x"); }
MultiPoly Y() { return MultiPoly::var("y"); }

Setoid mk(const std::vector<std::string>& els,
          const std::vector<std::vector<std::string>>& trees) {
  Setoid s;
  s.elements.insert(els.begin(), els.end());
  for (const auto& t : trees) s.trees.insert({t.begin(), t.end()});
  return s;
}

Setoid fig_setoid() { return mk({"e1", "e2", "e3"}, {{"e1"}, {"e2", "e3"}}); }

std::vector<std::string> els_of(const Setoid& s) {
  return {s.elements.begin(), s.elements.end()};
}

std::map<std::string, long long> census_map(const Setoid& s) {
  std::map<std::string, long long> out;
  for (const auto& [poly, count] : ordering_census(s)) out[poly.render()] = count;
  return out;
}

// Graphs with every edge marked special, vertices relabeled by perm.
using EdgeRecord = std::tuple<int, int, int, int, int, int, int>;

std::multiset<EdgeRecord> edge_records(const DecoratedGraph& g,
                                       const std::vector<int>& vmap) {
  std::multiset<EdgeRecord> out;
  for (const Edge& e : g.edges) {
    int u = vmap[e.u], v = vmap[e.v];
    if (u > v) std::swap(u, v);
    out.insert({u, v, e.color ? (*e.color == Color::b ? 0 : 1) : -1,
                e.sign.value_or(0), e.chrom ? e.chrom->index : -1,
                e.chrom ? (e.chrom->attr == Attr::d ? 0 : 1) : -1,
                e.special ? 1 : 0});
  }
  return out;
}

bool brute_iso(const DecoratedGraph& a, const DecoratedGraph& b) {
  if (a.vertex_count != b.vertex_count || a.edges.size() != b.edges.size())
    return false;
  std::vector<int> perm(a.vertex_count);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> ident = perm;
  std::multiset<EdgeRecord> want = edge_records(b, ident);
  do {
    if (edge_records(a, perm) == want) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return a.vertex_count == 0;
}

DecoratedGraph specialed(DecoratedGraph g) {
  for (Edge& e : g.edges) e.special = true;
  g.rotation.reset();
  return g;
}

DecoratedGraph with_chrom(DecoratedGraph g, Attr attr) {
  for (Edge& e : g.edges) e.chrom = Chrom{0, attr};
  return g;
}

DecoratedGraph doubled_triangle() {
  DecoratedGraph g = make_cycle(3);
  g.edges.push_back({3, 0, 1, {}, {}, {}, false});
  return g;
}

DecoratedGraph two_disjoint_edges() {
  DecoratedGraph g;
  g.vertex_count = 4;
  g.edges.push_back({0, 0, 1, {}, {}, {}, false});
  g.edges.push_back({1, 2, 3, {}, {}, {}, false});
  return g;
}

// Independent oracle for the matching specialization: sum y^|S| over
// subsets of pairwise vertex-disjoint non-loop edges.
MultiPoly matching_oracle(const DecoratedGraph& g) {
  size_t m = g.edges.size();
  MultiPoly acc;
  for (unsigned long long mask = 0; mask < (1ull << m); ++mask) {
    std::vector<int> deg(g.vertex_count, 0);
    bool ok = true;
    int picked = 0;
    for (size_t i = 0; i < m && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      const Edge& e = g.edges[i];
      if (e.is_loop()) ok = false;
      else if (++deg[e.u] > 1 || ++deg[e.v] > 1) ok = false;
      ++picked;
    }
    if (ok) acc += MultiPoly::monomial(1, {{"y", picked}});
  }
  return acc;
}

MultiPoly z_poly(const DecoratedGraph& g) {
  return specialize(g, SpecializeHom::z_dichromatic);
}

}  // namespace

TEST_CASE("setoid operations and element classification") {
  Setoid s2 = mk({"e1", "e2"}, {{"e1"}, {"e2"}});
  CHECK(classify(s2, "e1") == ElementClass::proper);
  CHECK(classify(s2, "e2") == ElementClass::proper);
  CHECK(setoid_ops(s2, "e1", SetoidOp::del) == mk({"e2"}, {{"e2"}}));
  CHECK(setoid_ops(s2, "e1", SetoidOp::contract) == mk({"e2"}, {{}}));

  Setoid nested = mk({"e1", "e2"}, {{"e1"}, {"e1", "e2"}});
  CHECK(classify(nested, "e1") == ElementClass::isthmus);
  CHECK(classify(nested, "e2") == ElementClass::proper);
  CHECK(classify(mk({"e1"}, {}), "e1") == ElementClass::loop);
  CHECK(classify(mk({"e1"}, {{}}), "e1") == ElementClass::loop);
  CHECK(classify(mk({"e1"}, {{"e1"}}), "e1") == ElementClass::isthmus);

  CHECK_THROWS_AS(classify(s2, "zz"), UnknownElement);
  CHECK_THROWS_AS(setoid_ops(s2, "zz", SetoidOp::del), UnknownElement);

  // duplicates collapse on construction
  CHECK(mk({"a"}, {{"a"}, {"a"}}).trees.size() == 1);

  for (const Setoid& s : {s2, fig_setoid(), nested, mk({"a", "b", "c"}, {})}) {
    Setoid d = setoid_ops(s, "", SetoidOp::dual);
    CHECK(d.trees.size() == (1ull << s.elements.size()) - s.trees.size());
    CHECK(setoid_ops(d, "", SetoidOp::dual) == s);
  }
}

TEST_CASE("setoid JSON round trip and parse errors") {
  for (const Setoid& s :
       {fig_setoid(), mk({}, {}), mk({"a"}, {{}}), mk({"a", "b"}, {{"a", "b"}})}) {
    CHECK(Setoid::from_json_string(s.to_json_string()) == s);
  }
  CHECK_THROWS_AS(Setoid::from_json_string("["), ParseError);
  CHECK_THROWS_AS(Setoid::from_json_string("{}"), ParseError);
  CHECK_THROWS_AS(Setoid::from_json_string(R"({"elements":3,"trees":[]})"),
                  ParseError);
  CHECK_THROWS_AS(
      Setoid::from_json_string(R"({"elements":["a","a"],"trees":[]})"),
      ParseError);
  CHECK_THROWS_AS(
      Setoid::from_json_string(R"({"elements":["a"],"trees":[["b"]]})"),
      ParseError);
  CHECK(Setoid::from_json_string(R"({"elements":["a"],"trees":[["a"],["a"]]})")
            .trees.size() == 1);

  Setoid bad = mk({"a"}, {});
  bad.trees.insert({"zz"});
  CHECK_THROWS_AS(bad.validate(), UnknownElement);
}

TEST_CASE("setoid Tutte polynomial: leaves, fixtures, ordering census") {
  CHECK(tutte_setoid(mk({}, {}), {}) == MultiPoly(1));
  CHECK(tutte_setoid(mk({"e"}, {}), {"e"}) == MultiPoly(1));
  CHECK(tutte_setoid(mk({"e"}, {{}}), {"e"}) == Y());
  CHECK(tutte_setoid(mk({"e"}, {{"e"}}), {"e"}) == X());

  Setoid s2 = mk({"e1", "e2"}, {{"e1"}, {"e2"}});
  CHECK(tutte_setoid(s2, {"e1", "e2"}) == X() + Y());
  CHECK(tutte_setoid(s2, {"e2", "e1"}) == X() + Y());

  // single tree plus a free element: immediate leaf whatever the order
  Setoid leafy = mk({"e1", "e2", "e3"}, {{"e1", "e2"}});
  std::vector<std::string> order = els_of(leafy);
  MultiPoly xxy = MultiPoly::monomial(1, {{"x", 2}, {"y", 1}});
  do {
    CHECK(tutte_setoid(leafy, order) == xxy);
  } while (std::next_permutation(order.begin(), order.end()));

  // the two-tree example: splitting on e1 gives x^2 + y^2, splitting on
  // e2 or e3 first gives 2xy
  Setoid fig = fig_setoid();
  CHECK(tutte_setoid(fig, {"e1", "e2", "e3"}) == X() * X() + Y() * Y());
  CHECK(tutte_setoid(fig, {"e2", "e1", "e3"}) == MultiPoly(2) * X() * Y());
  CHECK(tutte_setoid(fig, {"e3", "e2", "e1"}) == MultiPoly(2) * X() * Y());
  std::map<std::string, long long> census = census_map(fig);
  REQUIRE(census.size() == 2);
  CHECK(census.at((X() * X() + Y() * Y()).render()) == 2);
  CHECK(census.at((MultiPoly(2) * X() * Y()).render()) == 4);
  CHECK_FALSE(is_E_setoid(fig));

  CHECK_THROWS_AS(tutte_setoid(s2, {"e1"}), PreconditionViolated);
  CHECK_THROWS_AS(tutte_setoid(s2, {"e1", "e1"}), PreconditionViolated);
  CHECK_THROWS_AS(tutte_setoid(s2, {"e1", "zz"}), UnknownElement);
  CHECK_THROWS_AS(
      ordering_census(mk({"a", "b", "c", "d", "e", "f", "g"}, {})),
      TooManyOrderings);
}

TEST_CASE("symmetrization and the symmetric-setoid value") {
  Setoid fig = fig_setoid();
  Setoid sym = symmetrized(fig);
  CHECK(sym.trees.size() == 6);  // all singletons and all pairs
  for (const auto& t : sym.trees) CHECK((t.size() == 1 || t.size() == 2));
  CHECK(chi_sym(fig) == MultiPoly(4) + X() + Y());

  // symmetrizing something already symmetric changes nothing
  CHECK(symmetrized(sym) == sym);
  Setoid s2 = mk({"e1", "e2"}, {{"e1"}, {"e2"}});
  CHECK(symmetrized(s2) == s2);
  CHECK(chi_sym(s2) == X() + Y());

  std::mt19937 rng(411);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 3 + (int)(rng() % 3);
    std::vector<std::string> els;
    for (int i = 0; i < n; ++i) els.push_back("e" + std::to_string(i));
    Setoid s;
    s.elements.insert(els.begin(), els.end());
    for (unsigned mask = 0; mask < (1u << n); ++mask)
      if (rng() % 4 == 0) {
        std::set<std::string> t;
        for (int i = 0; i < n; ++i)
          if (mask >> i & 1) t.insert(els[i]);
        s.trees.insert(t);
      }
    Setoid ss = symmetrized(s);
    CHECK(is_E_setoid(ss));
    std::set<size_t> sizes;
    for (const auto& t : s.trees) sizes.insert(t.size());
    for (const auto& t : ss.trees) CHECK(sizes.count(t.size()));
    if (n <= 5 && !ss.trees.empty()) CHECK(census_map(ss).size() == 1);
  }
}

TEST_CASE("graph setoids match the graph Tutte polynomial for every order") {
  CHECK(graph_to_setoid(make_theta(2)) == mk({"0", "1"}, {{"0"}, {"1"}}));
  CHECK(graph_to_setoid(make_edgeless(1)) == mk({}, {{}}));
  CHECK_THROWS_AS(graph_to_setoid(make_edgeless(2)), Disconnected);
  CHECK_THROWS_AS(graph_to_setoid(two_disjoint_edges()), Disconnected);

  for (const DecoratedGraph& g : all_connected_multigraphs(4)) {
    Setoid s = graph_to_setoid(g);
    REQUIRE(s.elements.size() == g.edges.size());
    StructureReport rep = structure(g);
    for (const Edge& e : g.edges) {
      ElementClass cls = classify(s, std::to_string(e.id));
      bool is_loop = std::count(rep.loop_ids.begin(), rep.loop_ids.end(), e.id);
      bool is_isthmus =
          std::count(rep.isthmus_ids.begin(), rep.isthmus_ids.end(), e.id);
      CHECK(cls == (is_loop ? ElementClass::loop
                            : is_isthmus ? ElementClass::isthmus
                                         : ElementClass::proper));
    }

    MultiPoly t = tutte(g);
    std::vector<std::string> order = els_of(s);
    do {
      CHECK(tutte_setoid(s, order) == t);
    } while (std::next_permutation(order.begin(), order.end()));

    CHECK(is_E_setoid(s));

    // delete/contract commute with the translation on proper edges
    for (const Edge& e : g.edges) {
      std::string name = std::to_string(e.id);
      if (classify(s, name) != ElementClass::proper) continue;
      CHECK(graph_to_setoid(edit(g, e.id, EditKind::del)) ==
            setoid_ops(s, name, SetoidOp::del));
      CHECK(graph_to_setoid(edit(g, e.id, EditKind::contract)) ==
            setoid_ops(s, name, SetoidOp::contract));
    }
  }
}

TEST_CASE("E-setoids: order independence and minors at proper elements") {
  std::vector<Setoid> pool;
  for (const DecoratedGraph& g :
       {make_cycle(5), make_theta(5), make_path(5),
        edit(make_complete(4), 5, EditKind::del), doubled_triangle(),
        make_bouquet(3)})
    pool.push_back(graph_to_setoid(g));
  pool.push_back(symmetrized(fig_setoid()));
  pool.push_back(mk({"e1", "e2"}, {{"e1"}, {"e2"}}));

  for (const Setoid& s : pool) {
    CHECK(is_E_setoid(s));
    if (s.elements.size() <= 5 && !s.trees.empty()) {
      std::map<std::string, long long> census = census_map(s);
      CHECK(census.size() == 1);
      long long total = 0;
      for (const auto& [key, count] : census) total += count;
      long long fact = 1;
      for (size_t k = 2; k <= s.elements.size(); ++k) fact *= (long long)k;
      CHECK(total == fact);
    }
    // the exchange property is hereditary at proper elements
    for (const auto& e : s.elements) {
      if (classify(s, e) != ElementClass::proper) continue;
      CHECK(is_E_setoid(setoid_ops(s, e, SetoidOp::del)));
      CHECK(is_E_setoid(setoid_ops(s, e, SetoidOp::contract)));
    }
  }

  // duals of the E-setoid pool members keep order independence of chi
  Setoid s2 = mk({"e1", "e2"}, {{"e1"}, {"e2"}});
  for (const Setoid& s : {setoid_ops(s2, "", SetoidOp::dual),
                          setoid_ops(graph_to_setoid(make_theta(3)), "",
                                     SetoidOp::dual)}) {
    CHECK(is_E_setoid(s));
    CHECK(census_map(s).size() == 1);
  }
}

TEST_CASE("setoid sum, product and 2-connectivity") {
  Setoid a = mk({"a"}, {{"a"}});
  Setoid b = mk({"b"}, {{"b"}});
  CHECK(product(a, b) == mk({"a", "b"}, {{"a", "b"}}));
  CHECK(sum(a, b) == mk({"a", "b"}, {{"a"}, {"b"}}));
  CHECK_THROWS_AS(product(a, a), PreconditionViolated);

  CHECK(is_2connected(mk({"e1", "e2"}, {{"e1"}, {"e2"}})));
  CHECK(is_2connected(graph_to_setoid(make_theta(3))));
  CHECK_FALSE(is_2connected(graph_to_setoid(make_path(2))));
  CHECK_FALSE(is_2connected(product(a, b)));

  // bridge plus loop: factors as (bridge) * (loop)
  DecoratedGraph bl = make_path(1);
  bl.edges.push_back({1, 1, 1, {}, {}, {}, false});
  CHECK_FALSE(is_2connected(graph_to_setoid(bl)));

  Setoid s2 = mk({"e1", "e2"}, {{"e1"}, {"e2"}});
  Setoid s2b = mk({"f1", "f2"}, {{"f1"}, {"f2"}});
  Setoid prod = product(s2, s2b);
  CHECK(is_E_setoid(prod));
  CHECK_FALSE(is_2connected(prod));
  CHECK(product(graph_to_setoid(make_theta(2)), s2b).trees.size() == 4);

  CHECK_THROWS_AS(
      is_2connected(mk({"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k"},
                       {})),
      SizeCap);
}

TEST_CASE("pattern polynomial: fixtures, method agreement, round trip") {
  DecoratedGraph k2 = make_path(1);
  GraphCombination pat = pattern_polynomial(k2);
  REQUIRE(pat.terms.size() == 2);
  CHECK(pat.coeff(canonical_code(specialed(k2))) == 1);
  CHECK(pat.coeff(canonical_code(make_edgeless(2))) == 1);

  GraphCombination ce = classical_expansion(specialed(k2));
  REQUIRE(ce.terms.size() == 2);
  CHECK(ce.coeff(canonical_code(k2)) == 1);
  CHECK(ce.coeff(canonical_code(make_edgeless(2))) == -1);

  CHECK_THROWS_AS(pattern_polynomial(specialed(k2)), PreconditionViolated);

  std::vector<DecoratedGraph> pool = all_connected_multigraphs(3);
  pool.push_back(doubled_triangle());
  pool.push_back(two_disjoint_edges());
  pool.push_back(make_edgeless(3));

  for (const DecoratedGraph& g : pool) {
    GraphCombination by_res = pattern_polynomial(g, PatternMethod::resolution);
    GraphCombination by_cnt = pattern_polynomial(g, PatternMethod::counting);
    CHECK(by_res.coefficients() == by_cnt.coefficients());

    // the edgeless pattern appears exactly once
    CHECK(by_cnt.coeff(canonical_code(make_edgeless(g.vertex_count))) == 1);
    Int total = 0;
    for (const auto& [code, coeff] : by_cnt.coefficients()) {
      CHECK(coeff > 0);
      total += coeff;
    }
    CHECK(total == Int(1) << g.edges.size());

    // resolving every pattern term back to the classical basis returns G
    std::map<std::string, Int> back;
    for (const auto& [code, term] : by_cnt.terms) {
      GraphCombination expansion = classical_expansion(term.second);
      for (const auto& [c2, t2] : expansion.terms)
        back[c2] += term.first * t2.first;
    }
    for (auto it = back.begin(); it != back.end();)
      it = (it->second == 0) ? back.erase(it) : std::next(it);
    DecoratedGraph plain = g;
    plain.rotation.reset();
    REQUIRE(back.size() == 1);
    CHECK(back.begin()->first == canonical_code(plain));
    CHECK(back.begin()->second == 1);
  }

  // counts agree with brute-force isomorphism grouping of edge subsets
  for (const DecoratedGraph& g : all_connected_multigraphs(3)) {
    size_t m = g.edges.size();
    std::vector<DecoratedGraph> subgraphs;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      DecoratedGraph h;
      h.vertex_count = g.vertex_count;
      for (size_t i = 0; i < m; ++i)
        if (mask >> i & 1) h.edges.push_back(g.edges[i]);
      subgraphs.push_back(specialed(h));
    }
    GraphCombination pattern = pattern_polynomial(g, PatternMethod::counting);
    std::vector<bool> used(subgraphs.size(), false);
    Int classes = 0;
    for (size_t i = 0; i < subgraphs.size(); ++i) {
      if (used[i]) continue;
      Int count = 0;
      for (size_t j = i; j < subgraphs.size(); ++j)
        if (!used[j] && brute_iso(subgraphs[j], subgraphs[i])) {
          used[j] = true;
          count += 1;
        }
      classes += 1;
      CHECK(pattern.coeff(canonical_code(subgraphs[i])) == count);
    }
    CHECK(classes == Int((long long)pattern.terms.size()));
  }
}

TEST_CASE("specializations of the pattern polynomial") {
  // matching polynomial
  CHECK(specialize(make_path(2), SpecializeHom::matching) ==
        MultiPoly(1) + MultiPoly(2) * Y());
  CHECK(specialize(make_cycle(3), SpecializeHom::matching) ==
        MultiPoly(1) + MultiPoly(3) * Y());
  CHECK(specialize(make_path(1), SpecializeHom::matching) == MultiPoly(1) + Y());
  CHECK(specialize(make_bouquet(1), SpecializeHom::matching) == MultiPoly(1));
  CHECK(specialize(make_edgeless(3), SpecializeHom::matching) == MultiPoly(1));
  for (const DecoratedGraph& g : all_connected_multigraphs(4))
    CHECK(specialize(g, SpecializeHom::matching) == matching_oracle(g));

  MultiPoly t = MultiPoly::var("t"), z = MultiPoly::var("z");

  // Z(.) = q and the deletion/contraction rule Z(G) = Z(G-e) + v Z(G/e)
  CHECK(z_poly(make_edgeless(1)) == MultiPoly::var("q"));
  MultiPoly v = MultiPoly::var("v");
  for (const DecoratedGraph& g : {make_theta(2), make_cycle(3), doubled_triangle()})
    for (const Edge& e : g.edges) {
      if (e.is_loop()) continue;
      CHECK(z_poly(g) == z_poly(edit(g, e.id, EditKind::del)) +
                             v * z_poly(edit(g, e.id, EditKind::contract)));
    }

  for (const DecoratedGraph& g : all_connected_multigraphs(3)) {
    // pattern specialization equals Traldi's polynomial at unit weights
    MultiPoly q_unit =
        traldi_Q(with_chrom(g, Attr::d))
            .substitute({{"A0", MultiPoly(1)}, {"B0", MultiPoly(1)}});
    CHECK(specialize(g, SpecializeHom::traldi) == q_unit);
    CHECK(traldi_Q(with_chrom(g, Attr::l))
              .substitute({{"A0", MultiPoly(1)}, {"B0", MultiPoly(1)}}) ==
          q_unit);

    // Z(tz, z) = z^|V| Q(t, z)
    CHECK(z_poly(g).substitute({{"q", t * z}, {"v", z}}) ==
          MultiPoly::monomial(1, {{"z", g.vertex_count}}) *
              specialize(g, SpecializeHom::traldi));

    // <G>' = mu B^-|E| <G>
    CHECK(specialize(g, SpecializeHom::bracket_prime) ==
          MultiPoly::var("mu") *
              MultiPoly::monomial(1, {{"B", -(int)g.edges.size()}}) *
              graph_bracket(g));
  }
}

TEST_CASE("coproduct expansion and the intertwiner identity") {
  GraphTensor nothing = schmitt_coproduct(make_edgeless(2));
  std::string t2 = canonical_code(make_edgeless(2));
  REQUIRE(nothing.terms.size() == 1);
  CHECK(nothing.terms.at({t2, t2}) == 1);

  DecoratedGraph k2 = make_path(1);
  GraphTensor one = schmitt_coproduct(k2);
  std::string ke = canonical_code(k2);
  REQUIRE(one.terms.size() == 3);
  CHECK(one.terms.at({ke, ke}) == 1);
  CHECK(one.terms.at({ke, t2}) == 1);
  CHECK(one.terms.at({t2, ke}) == 1);

  DecoratedGraph loop = make_bouquet(1);
  GraphTensor lt = schmitt_coproduct(loop);
  std::string lc = canonical_code(loop);
  std::string t1 = canonical_code(make_edgeless(1));
  REQUIRE(lt.terms.size() == 3);
  CHECK(lt.terms.at({lc, lc}) == 1);
  CHECK(lt.terms.at({lc, t1}) == 1);
  CHECK(lt.terms.at({t1, lc}) == 1);

  Int total = 0;
  for (const auto& [codes, c] : schmitt_coproduct(doubled_triangle()).terms)
    total += c;
  CHECK(total == 81);

  CHECK_THROWS_AS(schmitt_coproduct(make_cycle(5)), SizeCap);
  CHECK_THROWS_AS(verify_intertwiner(make_cycle(5)), SizeCap);
  CHECK_THROWS_AS(schmitt_coproduct(specialed(k2)), PreconditionViolated);

  CHECK(verify_intertwiner(make_edgeless(2)));
  CHECK(verify_intertwiner(two_disjoint_edges()));
  for (const DecoratedGraph& g : all_connected_multigraphs(3))
    CHECK(verify_intertwiner(g));
  CHECK(verify_intertwiner(doubled_triangle()));
}
