#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "gp/corpus.hpp"
#include "gp/diagram.hpp"
#include "gp/errors.hpp"
#include "gp/graph.hpp"

using namespace gp;

namespace {

Diagram hopf() { return ingest_braid(2, {1, 1}); }
Diagram trefoil() { return ingest_braid(2, {1, 1, 1}); }
Diagram r2_pair() { return ingest_braid(2, {1, -1}); }
Diagram kink() { return ingest_pd({{1, 1, 2, 2}}); }
Diagram nine42() { return ingest_braid(4, {2, 2, 2, 3, -1, 2, -3, -3, -1, 2, -3}); }

Diagram circle() {
  Diagram d;
  d.extra_circles = 1;
  return d;
}

// Two right trefoils spliced along one strand of each: the 6-crossing
// alternating diagram of their connected sum.
Diagram granny() {
  return ingest_pd({{1, 3, 4, 2},
                    {3, 5, 6, 4},
                    {5, 7, 2, 6},
                    {7, 9, 10, 8},
                    {9, 11, 12, 10},
                    {11, 1, 8, 12}});
}

Diagram split_trefoils() {
  return ingest_pd({{1, 3, 4, 2},
                    {3, 5, 6, 4},
                    {5, 1, 2, 6},
                    {7, 9, 10, 8},
                    {9, 11, 12, 10},
                    {11, 7, 8, 12}});
}

KauffmanState mask_state(const Diagram& d, unsigned mask) {
  KauffmanState s;
  for (std::size_t i = 0; i < d.crossings.size(); ++i)
    s.marker[d.crossings[i].id] = (mask >> i) & 1u ? 1 : -1;
  return s;
}

KauffmanState sign_state(const Diagram& d) {
  KauffmanState s;
  auto sg = crossing_signs(d);
  for (std::size_t i = 0; i < d.crossings.size(); ++i) s.marker[d.crossings[i].id] = sg[i];
  return s;
}

// Connected components of the underlying projection, crossing-free
// circles included.
int mu_prime(const Diagram& d) {
  auto pass = strand_passages(d);
  int k = static_cast<int>(pass.size());
  std::vector<int> root(static_cast<std::size_t>(k));
  std::iota(root.begin(), root.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return root[static_cast<std::size_t>(x)] == x
               ? x
               : root[static_cast<std::size_t>(x)] = find(root[static_cast<std::size_t>(x)]);
  };
  std::map<int, int> owner;
  for (int i = 0; i < k; ++i)
    for (const auto& [c, t] : pass[static_cast<std::size_t>(i)]) {
      auto [it, fresh] = owner.emplace(c, i);
      if (!fresh) root[static_cast<std::size_t>(find(it->second))] = find(i);
    }
  std::set<int> classes;
  for (int i = 0; i < k; ++i) classes.insert(find(i));
  return static_cast<int>(classes.size()) + d.extra_circles;
}

// 1 <= |sD| <= n+1 for connected diagrams, and a state and its
// complement together never exceed n+2 circles.
void check_state_bounds(const Diagram& d) {
  int n = crossing_count(d);
  REQUIRE(n <= 12);
  unsigned full = (1u << n) - 1u;
  std::vector<int> circ(static_cast<std::size_t>(full) + 1);
  for (unsigned mask = 0; mask <= full; ++mask) {
    circ[mask] = resolve(d, mask_state(d, mask)).circle_count;
    CHECK(circ[mask] >= 1);
    CHECK(circ[mask] <= n + 1);
  }
  for (unsigned mask = 0; mask <= full; ++mask) CHECK(circ[mask] + circ[full ^ mask] <= n + 2);
}

DecoratedGraph k2_graph(Color c, int sign) {
  DecoratedGraph g;
  g.vertex_count = 2;
  Edge e;
  e.id = 0;
  e.u = 0;
  e.v = 1;
  e.color = c;
  e.sign = sign;
  g.edges.push_back(e);
  g.rotation = Rotation{{{0, 0}}, {{0, 1}}};
  return g;
}

DecoratedGraph loop_graph(Color c, int sign) {
  DecoratedGraph g;
  g.vertex_count = 1;
  Edge e;
  e.id = 0;
  e.u = 0;
  e.v = 0;
  e.color = c;
  e.sign = sign;
  g.edges.push_back(e);
  g.rotation = Rotation{{{0, 0}, {0, 1}}};
  return g;
}

DecoratedGraph colored(DecoratedGraph g, Color c, int sign) {
  for (Edge& e : g.edges) {
    e.color = c;
    e.sign = sign;
  }
  return g;
}

void check_checkerboard_identities(const Diagram& d) {
  auto ad = adequacy(d);
  for (Shading sh : {Shading::black_left_of_reference, Shading::other}) {
    DecoratedGraph G = to_graph(d, sh);
    G.validate();
    auto stb = structure(color_subgraph(G, Color::b));
    auto stw = structure(color_subgraph(G, Color::w));
    CHECK(ad.s_plus_circles == stb.p0 + stb.p1);
    CHECK(ad.s_minus_circles == stw.p0 + stw.p1);
    bool plus_crit = stb.isthmus_ids.empty() &&
                     structure(color_quotient(G, Color::w)).loop_ids.empty();
    bool minus_crit = stw.isthmus_ids.empty() &&
                      structure(color_quotient(G, Color::b)).loop_ids.empty();
    CHECK(ad.plus == plus_crit);
    CHECK(ad.minus == minus_crit);
  }
}

}  // namespace

TEST_CASE("braid closures: Hopf, trefoil, 9_42") {
  Diagram h = hopf();
  CHECK(crossing_count(h) == 2);
  CHECK(component_count(h) == 2);
  CHECK(h.crossings[0].arcs == std::array<int, 4>{1, 3, 4, 2});
  CHECK(h.crossings[1].arcs == std::array<int, 4>{3, 1, 2, 4});
  CHECK(component_arcs(h) == std::vector<std::vector<int>>{{1, 4}, {2, 3}});
  std::vector<std::vector<std::pair<int, char>>> hp = {{{0, 'U'}, {1, 'O'}},
                                                       {{0, 'O'}, {1, 'U'}}};
  CHECK(strand_passages(h) == hp);
  CHECK(crossing_signs(h) == std::vector<int>{1, 1});
  CHECK(writhe(h) == 2);

  Diagram t = trefoil();
  CHECK(crossing_count(t) == 3);
  CHECK(component_count(t) == 1);
  CHECK(t.crossings[0].arcs == std::array<int, 4>{1, 3, 4, 2});
  CHECK(t.crossings[1].arcs == std::array<int, 4>{3, 5, 6, 4});
  CHECK(t.crossings[2].arcs == std::array<int, 4>{5, 1, 2, 6});
  CHECK(component_arcs(t) == std::vector<std::vector<int>>{{1, 4, 5, 2, 3, 6}});
  CHECK(writhe(t) == 3);

  Diagram n = nine42();
  CHECK(crossing_count(n) == 11);
  CHECK(component_count(n) == 1);
  CHECK(writhe(n) == 1);
  CHECK(seifert(n).s == 4);

  CHECK(component_count(ingest_braid(1, {})) == 1);
  CHECK(crossing_count(ingest_braid(1, {})) == 0);
  CHECK(component_count(ingest_braid(3, {})) == 3);
  CHECK(component_count(ingest_braid(3, {1})) == 2);
  CHECK_THROWS_AS(ingest_braid(2, {2}), BadBraidLetter);
  CHECK_THROWS_AS(ingest_braid(2, {0}), BadBraidLetter);
  CHECK_THROWS_AS(ingest_braid(0, {}), BadBraidLetter);

  std::mt19937 rng(77);
  for (int it = 0; it < 30; ++it) {
    int strands = 2 + static_cast<int>(rng() % 3);
    int len = 1 + static_cast<int>(rng() % 8);
    std::vector<int> word;
    int sum = 0;
    for (int k = 0; k < len; ++k) {
      int a = 1 + static_cast<int>(rng() % static_cast<unsigned>(strands - 1));
      int s = rng() % 2 ? 1 : -1;
      word.push_back(s * a);
      sum += s;
    }
    Diagram d = ingest_braid(strands, word);
    CHECK(writhe(d) == sum);
    CHECK(seifert(d).s == strands);
    auto lk = linking(d);
    CHECK(lk.sw + 2 * lk.total == writhe(d));
    for (const auto& [c, touch] : resolve(d, sign_state(d)).self_touch) CHECK_FALSE(touch);
    CHECK(crossing_count(d) >= seifert(d).s - mu_prime(d));
  }
}

TEST_CASE("PD ingestion, kinks and malformed codes") {
  Diagram k = kink();
  CHECK(crossing_count(k) == 1);
  CHECK(component_count(k) == 1);
  CHECK(writhe(k) == 1);
  CHECK(component_arcs(k) == std::vector<std::vector<int>>{{1, 2}});
  auto pr = predicates(k);
  CHECK(pr.connected);
  CHECK(pr.alternating);
  CHECK_FALSE(pr.reduced);
  CHECK_FALSE(pr.prime);
  CHECK(pr.nugatory_ids == std::vector<int>{0});
  CHECK(resolve(k, mask_state(k, 1)).circle_count == 2);
  CHECK(resolve(k, mask_state(k, 0)).circle_count == 1);
  auto ad = adequacy(k);
  CHECK(ad.plus);
  CHECK_FALSE(ad.minus);
  CHECK(ad.s_plus_circles == 2);
  CHECK(ad.s_minus_circles == 1);
  auto lk = linking(k);
  CHECK(lk.per_component == std::vector<int>{0});
  CHECK(lk.total == 0);
  CHECK(lk.sw == 1);

  // half-rotating the quad reverses the under-strand alone: mirror kink
  Diagram k2 = ingest_pd({{2, 1, 1, 2}});
  CHECK(writhe(k2) == -1);

  CHECK_THROWS_AS(ingest_pd({{1, 2, 3, 4}}), MalformedPD);
  CHECK_THROWS_AS(ingest_pd({{1, 1, 1, 2}}), MalformedPD);
  // under-strand direction conflict: third quad rotated half way round
  CHECK_THROWS_AS(ingest_pd({{1, 3, 4, 2}, {3, 5, 6, 4}, {2, 6, 5, 1}}), MalformedPD);
  // two crossings, one strand under at both: fails the face count
  CHECK_THROWS_AS(ingest_pd({{1, 3, 2, 4}, {2, 4, 1, 3}}), MalformedPD);
}

TEST_CASE("diagram JSON: round trips, orientation lists, circles") {
  for (const Diagram& d :
       {hopf(), trefoil(), kink(), r2_pair(), granny(), split_trefoils(), circle(), nine42()}) {
    Diagram back = ingest(d.to_json_string());
    REQUIRE(back.crossings.size() == d.crossings.size());
    for (std::size_t i = 0; i < d.crossings.size(); ++i)
      CHECK(back.crossings[i].arcs == d.crossings[i].arcs);
    CHECK(back.extra_circles == d.extra_circles);
    CHECK(back.oriented == d.oriented);
    CHECK(writhe(back) == writhe(d));
  }

  Diagram rev = transform(hopf(), DiagramTransform::reverse_component, 0);
  CHECK(rev.to_json_string().find("orient") != std::string::npos);
  CHECK(writhe(ingest(rev.to_json_string())) == -2);

  std::string hopf_pd = R"([[1,3,4,2],[3,1,2,4]])";
  Diagram flip = ingest(R"({"pd":)" + hopf_pd + R"(,"orient":[1,-1]})");
  CHECK(writhe(flip) == -2);
  CHECK(crossing_signs(flip) == std::vector<int>{-1, -1});
  CHECK(writhe(ingest(R"({"pd":)" + hopf_pd + R"(,"orient":[-1,-1]})")) == 2);

  Diagram un = ingest(R"({"pd":)" + hopf_pd + R"(,"orient":null})");
  CHECK_FALSE(un.oriented);
  CHECK(un.to_json_string().find("null") != std::string::npos);
  CHECK_THROWS_AS(writhe(un), Unoriented);
  CHECK_THROWS_AS(crossing_signs(un), Unoriented);
  CHECK_THROWS_AS(linking(un), Unoriented);
  CHECK_THROWS_AS(seifert(un), Unoriented);
  CHECK_THROWS_AS(transform(un, DiagramTransform::reverse_all), Unoriented);
  CHECK(adequacy(un).plus);  // state-sum side works unoriented
  CHECK(bridges(un).b == 1);
  CHECK(component_count(un) == 2);

  CHECK_THROWS_AS(ingest(R"({"pd":)" + hopf_pd + R"(,"orient":[1]})"), MalformedPD);
  CHECK_THROWS_AS(ingest(R"({"pd":)" + hopf_pd + R"(,"orient":[1,0]})"), ParseError);
  CHECK_THROWS_AS(ingest(R"({"pd":)" + hopf_pd + R"(,"orient":"x"})"), ParseError);

  Diagram two = ingest(R"({"pd":[],"circles":2})");
  CHECK(crossing_count(two) == 0);
  CHECK(component_count(two) == 2);
  CHECK_THROWS_AS(ingest(R"({"pd":[],"circles":-1})"), ParseError);

  Diagram mixed = ingest(R"({"pd":[[1,1,2,2]],"circles":1})");
  CHECK(component_count(mixed) == 2);
  CHECK_FALSE(predicates(mixed).connected);
  CHECK_THROWS_AS(adequacy(mixed), NotApplicable);

  CHECK(writhe(ingest(R"({"braid":{"strands":2,"word":[1,1]}})")) == 2);
  DecoratedGraph tg = colored(make_theta(2, true), Color::b, 1);
  CHECK(writhe(ingest(R"({"graph":)" + tg.to_json_string() + "}")) == 2);

  CHECK_THROWS_AS(ingest("nonsense"), ParseError);
  CHECK_THROWS_AS(ingest(R"({"pd":5})"), ParseError);
  CHECK_THROWS_AS(ingest(R"({"pd":[[1,2,3]]})"), ParseError);
  CHECK_THROWS_AS(ingest(R"({"braid":{"strands":2}})"), ParseError);
  CHECK_THROWS_AS(ingest(R"({"x":1})"), ParseError);
}

TEST_CASE("Kauffman states: resolve, adequacy, exhaustive bounds") {
  CHECK(resolve(circle(), KauffmanState{}).circle_count == 1);

  Diagram t = trefoil();
  auto ad = adequacy(t);
  CHECK(ad.plus);
  CHECK(ad.minus);
  CHECK(ad.s_plus_circles == 2);
  CHECK(ad.s_minus_circles == 3);
  CHECK(ad.s_plus_circles + ad.s_minus_circles == crossing_count(t) + 2);

  auto adh = adequacy(hopf());
  CHECK(adh.plus);
  CHECK(adh.minus);
  CHECK(adh.s_plus_circles == 2);
  CHECK(adh.s_minus_circles == 2);

  // a positive 4-crossing closed 2-braid stays plus-adequate
  CHECK(adequacy(ingest_braid(2, {1, 1, 1, 1})).plus);
  // the reducible pair is inadequate on the plus side
  auto adr = adequacy(r2_pair());
  CHECK_FALSE(adr.plus);
  CHECK(adr.s_plus_circles == 1);

  auto adg = adequacy(granny());
  CHECK(adg.plus);
  CHECK(adg.minus);
  CHECK(adg.s_plus_circles == 3);
  CHECK(adg.s_minus_circles == 5);

  CHECK(adequacy(split_trefoils()).plus);
  CHECK_THROWS_AS(adequacy(circle()), NotApplicable);
  CHECK_THROWS_AS(adequacy(ingest_pd({})), NotApplicable);

  KauffmanState missing;
  CHECK_THROWS_AS(resolve(trefoil(), missing), PreconditionViolated);
  KauffmanState bad = mask_state(trefoil(), 0);
  bad.marker[0] = 2;
  CHECK_THROWS_AS(resolve(trefoil(), bad), PreconditionViolated);

  check_state_bounds(kink());
  check_state_bounds(hopf());
  check_state_bounds(trefoil());
  check_state_bounds(r2_pair());
  check_state_bounds(granny());
  check_state_bounds(nine42());
}

TEST_CASE("Seifert circles and tree-likeness") {
  auto se = seifert(hopf());
  CHECK(se.s == 2);
  CHECK(se.d_plus == 1);
  CHECK(se.d_minus == 0);
  CHECK(se.simplified_tree_like);
  CHECK(se.seifert_graph.vertex_count == 2);
  CHECK(se.seifert_graph.edges.size() == 2);

  se = seifert(trefoil());
  CHECK(se.s == 2);
  CHECK(se.d_plus == 1);
  CHECK(se.d_minus == 0);
  CHECK(se.simplified_tree_like);

  se = seifert(r2_pair());
  CHECK(se.s == 2);
  CHECK(se.d_plus == 1);
  CHECK(se.d_minus == 1);
  CHECK_FALSE(se.simplified_tree_like);

  se = seifert(split_trefoils());
  CHECK(se.s == 4);
  CHECK(se.d_plus == 2);
  CHECK(se.d_minus == 0);
  CHECK_FALSE(se.simplified_tree_like);

  se = seifert(circle());
  CHECK(se.s == 1);
  CHECK(se.simplified_tree_like);

  for (const Diagram& d : {hopf(), trefoil(), granny(), nine42()})
    for (const auto& [c, touch] : resolve(d, sign_state(d)).self_touch) CHECK_FALSE(touch);
}

TEST_CASE("predicates: alternation, reduction, primality") {
  auto pr = predicates(trefoil());
  CHECK(pr.connected);
  CHECK(pr.alternating);
  CHECK(pr.reduced);
  CHECK(pr.prime);
  CHECK(pr.nugatory_ids.empty());

  pr = predicates(r2_pair());
  CHECK(pr.connected);
  CHECK_FALSE(pr.alternating);
  CHECK(pr.reduced);

  pr = predicates(granny());
  CHECK(pr.connected);
  CHECK(pr.alternating);
  CHECK(pr.reduced);
  CHECK_FALSE(pr.prime);

  pr = predicates(split_trefoils());
  CHECK_FALSE(pr.connected);
  CHECK(pr.alternating);
  CHECK(pr.reduced);
  CHECK_FALSE(pr.prime);

  pr = predicates(circle());
  CHECK(pr.connected);
  CHECK(pr.alternating);
  CHECK(pr.reduced);
  CHECK_FALSE(pr.prime);

  CHECK_FALSE(predicates(nine42()).alternating);
  CHECK(predicates(nine42()).connected);
  CHECK_FALSE(predicates(ingest_pd({})).prime);

  // switching one crossing breaks alternation
  CHECK_FALSE(predicates(switch_crossing(hopf(), 0)).alternating);
}

TEST_CASE("bridges") {
  CHECK(bridges(hopf()).b == 1);
  CHECK(bridges(hopf()).b_generalized == 1);
  CHECK(bridges(trefoil()).b == 1);
  // the strand passing over at both crossings counts its full length
  CHECK(bridges(r2_pair()).b == 2);
  CHECK(bridges(r2_pair()).b_generalized == 2);
  CHECK(bridges(circle()).b == 0);
  CHECK(bridges(switch_crossing(trefoil(), 0)).b >= 2);
  for (const Diagram& d : {trefoil(), nine42(), granny()}) {
    auto br = bridges(d);
    CHECK(br.b_generalized >= br.b);
    CHECK(br.b >= 1);
  }
}

TEST_CASE("linking numbers and self-writhe") {
  auto lk = linking(hopf());
  CHECK(lk.per_component == std::vector<int>{1, 1});
  CHECK(lk.total == 1);
  CHECK(lk.sw == 0);

  Diagram d3 = ingest_braid(3, {1, 1, 2, 2});
  CHECK(component_count(d3) == 3);
  CHECK(writhe(d3) == 4);
  lk = linking(d3);
  CHECK(lk.per_component == std::vector<int>{1, 2, 1});
  CHECK(lk.total == 2);
  CHECK(lk.sw == 0);

  lk = linking(nine42());
  CHECK(lk.per_component == std::vector<int>{0});
  CHECK(lk.total == 0);
  CHECK(lk.sw == 1);

  lk = linking(split_trefoils());
  CHECK(lk.per_component == std::vector<int>{0, 0});
  CHECK(lk.total == 0);
  CHECK(lk.sw == 6);

  lk = linking(circle());
  CHECK(lk.per_component == std::vector<int>{0});
}

TEST_CASE("transforms: mirror, reversal, switch, smooth") {
  Diagram m = transform(trefoil(), DiagramTransform::mirror);
  CHECK(writhe(m) == -3);
  CHECK(predicates(m).alternating);
  Diagram mm = transform(m, DiagramTransform::mirror);
  REQUIRE(mm.crossings.size() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(mm.crossings[i].arcs == trefoil().crossings[i].arcs);
  CHECK(writhe(mm) == 3);

  auto adk = adequacy(transform(kink(), DiagramTransform::mirror));
  CHECK_FALSE(adk.plus);
  CHECK(adk.minus);

  CHECK(writhe(transform(hopf(), DiagramTransform::reverse_component, 0)) == -2);
  CHECK(writhe(transform(hopf(), DiagramTransform::reverse_component, 1)) == -2);
  CHECK(writhe(transform(hopf(), DiagramTransform::reverse_all)) == 2);
  CHECK(writhe(transform(trefoil(), DiagramTransform::reverse_component, 0)) == 3);
  CHECK(writhe(transform(trefoil(), DiagramTransform::reverse_all)) == 3);
  CHECK_THROWS_AS(transform(hopf(), DiagramTransform::reverse_component, 2),
                  PreconditionViolated);
  CHECK(writhe(transform(circle(), DiagramTransform::reverse_component, 0)) == 0);

  // reversing one component flips exactly its inter-component crossings
  Diagram d3 = ingest_braid(3, {1, 1, 2, 2});
  auto lk3 = linking(d3);
  for (int i = 0; i < 3; ++i)
    CHECK(writhe(transform(d3, DiagramTransform::reverse_component, i)) ==
          writhe(d3) - 4 * lk3.per_component[static_cast<std::size_t>(i)]);

  Diagram sw = switch_crossing(hopf(), 0);
  CHECK(crossing_signs(sw) == std::vector<int>{-1, 1});
  CHECK(writhe(sw) == 0);
  Diagram sw2 = switch_crossing(sw, 0);
  for (std::size_t i = 0; i < 2; ++i)
    CHECK(sw2.crossings[i].arcs == hopf().crossings[i].arcs);
  CHECK(writhe(sw2) == 2);
  CHECK_THROWS_AS(switch_crossing(hopf(), 9), PreconditionViolated);

  Diagram sk = smooth_crossing(kink(), 0, 1);
  CHECK(crossing_count(sk) == 0);
  CHECK(component_count(sk) == 2);
  CHECK_FALSE(sk.oriented);
  CHECK(component_count(smooth_crossing(kink(), 0, -1)) == 1);
  CHECK(smooth_crossing(kink(), 0, 1, true).oriented);

  Diagram sh = smooth_crossing(hopf(), 0, 1, true);
  CHECK(sh.oriented);
  REQUIRE(crossing_count(sh) == 1);
  CHECK(sh.crossings[0].arcs == std::array<int, 4>{1, 1, 2, 2});
  CHECK(writhe(sh) == 1);
  CHECK(component_count(sh) == 1);

  CHECK_THROWS_AS(smooth_crossing(hopf(), 0, -1, true), PreconditionViolated);
  CHECK_THROWS_AS(smooth_crossing(hopf(), 0, 2), PreconditionViolated);
  CHECK_THROWS_AS(smooth_crossing(hopf(), 7, 1), PreconditionViolated);
  Diagram un = ingest(R"({"pd":[[1,3,4,2],[3,1,2,4]],"orient":null})");
  CHECK_THROWS_AS(smooth_crossing(un, 0, 1, true), Unoriented);
  CHECK(crossing_count(smooth_crossing(un, 0, 1)) == 1);
}

TEST_CASE("matched diagrams from signed plane graphs") {
  // realizability screen
  CHECK_FALSE(validate_graph(k2_graph(Color::b, 1)).ok);
  CHECK_FALSE(validate_graph(k2_graph(Color::w, -1)).ok);
  CHECK(validate_graph(k2_graph(Color::b, -1)).ok);
  CHECK(validate_graph(k2_graph(Color::w, 1)).ok);
  CHECK_FALSE(validate_graph(loop_graph(Color::b, -1)).ok);
  CHECK_FALSE(validate_graph(loop_graph(Color::w, 1)).ok);
  CHECK(validate_graph(loop_graph(Color::b, 1)).ok);
  CHECK(validate_graph(loop_graph(Color::w, -1)).ok);
  CHECK_FALSE(validate_graph(colored(make_path(2), Color::b, 1)).ok);
  CHECK(validate_graph(colored(make_theta(2, true), Color::b, 1)).ok);

  CHECK_THROWS_AS(ingest_graph(k2_graph(Color::b, 1)), GraphNotRealizable);
  CHECK_THROWS_AS(ingest_graph(k2_graph(Color::w, -1)), GraphNotRealizable);
  CHECK_THROWS_AS(ingest_graph(loop_graph(Color::b, -1)), GraphNotRealizable);
  CHECK_THROWS_AS(ingest_graph(loop_graph(Color::w, 1)), GraphNotRealizable);

  // forced kink signs
  CHECK(writhe(ingest_graph(k2_graph(Color::b, -1))) == -1);
  CHECK(writhe(ingest_graph(k2_graph(Color::w, 1))) == 1);
  CHECK(writhe(ingest_graph(loop_graph(Color::b, 1))) == 1);
  CHECK(writhe(ingest_graph(loop_graph(Color::w, -1))) == -1);

  CHECK_THROWS_AS(ingest_graph(colored(make_theta(2, false), Color::b, 1)), NoEmbedding);
  DecoratedGraph uncolored_theta = make_theta(2, true);
  CHECK_THROWS_AS(ingest_graph(uncolored_theta), UncoloredEdge);

  // face parity: two b+ strands plus a w+ chord cannot be drawn
  DecoratedGraph bbw = colored(make_theta(3, true), Color::b, 1);
  bbw.edges[2].color = Color::w;
  CHECK_FALSE(validate_graph(bbw).ok);
  CHECK_THROWS_AS(ingest_graph(bbw), GraphNotRealizable);

  // the all-b+ two-gon matches the positive Hopf link
  DecoratedGraph tg = colored(make_theta(2, true), Color::b, 1);
  Diagram d = ingest_graph(tg);
  CHECK(crossing_count(d) == 2);
  CHECK(component_count(d) == 2);
  CHECK(writhe(d) == 2);
  CHECK(linking(d).total == 1);
  auto ad = adequacy(d);
  CHECK(ad.s_plus_circles == 2);
  CHECK(ad.s_minus_circles == 2);
  CHECK(predicates(d).alternating);
  bool self_match = false;
  for (Shading sh : {Shading::black_left_of_reference, Shading::other})
    self_match = self_match || canonical_code(to_graph(d, sh)) == canonical_code(tg);
  CHECK(self_match);
  CHECK(ingest_graph(tg).to_json_string() == d.to_json_string());

  // ...and the all-w- two-gon its mirror
  DecoratedGraph tw = colored(make_theta(2, true), Color::w, -1);
  Diagram dm = ingest_graph(tw);
  CHECK(writhe(dm) == -2);
  CHECK(linking(dm).total == -1);

  // the all-b+ triangle closes up into the positive trefoil
  Diagram dt = ingest_graph(colored(make_cycle(3, true), Color::b, 1));
  CHECK(crossing_count(dt) == 3);
  CHECK(component_count(dt) == 1);
  CHECK(writhe(dt) == 3);
  CHECK(predicates(dt).alternating);
  CHECK(predicates(dt).prime);
}

TEST_CASE("checkerboard graphs: shadings, duality, round trips") {
  CHECK(canonical_code(to_graph(circle())) == canonical_code(make_edgeless(1)));
  CHECK_THROWS_AS(to_graph(split_trefoils()), Disconnected);
  CHECK_THROWS_AS(to_graph(ingest(R"({"pd":[[1,1,2,2]],"circles":1})")), Disconnected);

  // the standard trefoil checkerboards to the b+ triangle and its dual
  std::set<std::string> got = {
      canonical_code(to_graph(trefoil(), Shading::black_left_of_reference)),
      canonical_code(to_graph(trefoil(), Shading::other))};
  std::set<std::string> want = {canonical_code(colored(make_cycle(3), Color::b, 1)),
                                canonical_code(colored(make_theta(3), Color::w, 1))};
  CHECK(got == want);

  // mirroring swaps colors and signs
  std::set<std::string> got_m = {
      canonical_code(to_graph(transform(trefoil(), DiagramTransform::mirror),
                              Shading::black_left_of_reference)),
      canonical_code(to_graph(transform(trefoil(), DiagramTransform::mirror), Shading::other))};
  std::set<std::string> want_m = {canonical_code(colored(make_cycle(3), Color::w, -1)),
                                  canonical_code(colored(make_theta(3), Color::b, -1))};
  CHECK(got_m == want_m);

  check_checkerboard_identities(kink());
  check_checkerboard_identities(hopf());
  check_checkerboard_identities(trefoil());
  check_checkerboard_identities(r2_pair());
  check_checkerboard_identities(granny());
  check_checkerboard_identities(nine42());

  std::mt19937 rng(4242);
  for (int it = 0; it < 20; ++it) {
    DecoratedGraph g = random_plane_2connected(rng, 3 + it % 7);
    for (Edge& e : g.edges) e.color = rng() % 2 ? Color::b : Color::w;
    Diagram d0 = ingest_graph(g);
    auto signs = crossing_signs(d0);
    DecoratedGraph g1 = g;
    for (std::size_t i = 0; i < d0.crossings.size(); ++i)
      g1.edge_by_id(d0.crossings[i].id).sign = signs[i];
    CHECK(validate_graph(g1).ok);

    Diagram d = ingest_graph(g1);
    DecoratedGraph gb = to_graph(d, Shading::black_left_of_reference);
    DecoratedGraph gw = to_graph(d, Shading::other);
    gb.validate();
    gw.validate();
    std::string cg = canonical_code(g1);
    CHECK((canonical_code(gb) == cg || canonical_code(gw) == cg));
    CHECK(canonical_code(faces_and_dual(gb).dual) == canonical_code(gw));
    CHECK(canonical_code(faces_and_dual(gw).dual) == canonical_code(gb));
    check_checkerboard_identities(d);
  }
}

TEST_CASE("alternating matched corpus") {
  std::mt19937 rng(99);
  for (int it = 0; it < 12; ++it) {
    int m = 3 + it % 8;
    DecoratedGraph g = random_plane_2connected(rng, m);
    for (Edge& e : g.edges) {
      e.color = Color::b;
      e.sign.reset();
    }
    Diagram d = ingest_graph(g);
    int n = crossing_count(d);
    CHECK(n == static_cast<int>(g.edges.size()));

    auto pr = predicates(d);
    CHECK(pr.connected);
    CHECK(pr.alternating);
    CHECK(pr.reduced);
    CHECK(pr.prime);
    CHECK(pr.nugatory_ids.empty());
    CHECK(bridges(d).b == 1);

    auto ad = adequacy(d);
    CHECK(ad.plus);
    CHECK(ad.minus);
    CHECK(ad.s_plus_circles + ad.s_minus_circles == n + 2);

    auto se = seifert(d);
    CHECK(se.s <= n + 1);
    CHECK(n >= se.s - mu_prime(d));
    for (const auto& [c, touch] : resolve(d, sign_state(d)).self_touch) CHECK_FALSE(touch);

    auto lk = linking(d);
    CHECK(lk.sw + 2 * lk.total == writhe(d));

    DecoratedGraph g1 = g;
    auto signs = crossing_signs(d);
    for (std::size_t i = 0; i < d.crossings.size(); ++i)
      g1.edge_by_id(d.crossings[i].id).sign = signs[i];
    bool self_match = false;
    for (Shading sh : {Shading::black_left_of_reference, Shading::other})
      self_match = self_match || canonical_code(to_graph(d, sh)) == canonical_code(g1);
    CHECK(self_match);
    check_checkerboard_identities(d);

    if (n <= 8) check_state_bounds(d);
  }
}
