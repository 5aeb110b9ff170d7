#include "gp/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <random>
#include <sstream>
#include <thread>

#include "gp/corpus.hpp"
#include "gp/errors.hpp"
#include "gp/graph.hpp"
#include "gp/graphpoly.hpp"
#include "json.hpp"

namespace gp {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex;
  for (int i = 15; i >= 0; --i) os << ((v >> (4 * i)) & 0xf);
  return os.str();
}

std::string digest_of(const Diagram& d) { return hex64(fnv1a(d.to_json_string())); }

std::string digest_of(const Diagram& a, const Diagram& b) {
  return hex64(fnv1a(a.to_json_string() + "|" + b.to_json_string()));
}

Diagram oriented_copy(const Diagram& d) {
  Diagram o = d;
  if (!o.oriented) {
    o.oriented = true;
    o.dirs.clear();
  }
  return o;
}

nlohmann::ordered_json diagram_json(const Diagram& d) {
  return nlohmann::ordered_json::parse(d.to_json_string());
}

std::string repro_payload(const std::string& check, const Diagram& d,
                          const nlohmann::ordered_json& extra = {}) {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["input"] = diagram_json(d);
  for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
  return j.dump();
}

// Accumulates sub-assertions; the first violation is kept verbatim.
struct Gate {
  bool ok = true;
  std::string first;
  void demand(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      first = what;
    }
  }
};

CheckReport finish(CheckReport r, Clock::time_point t0, const Gate& g,
                   const std::string& detail_pass, const Diagram* d = nullptr,
                   const nlohmann::ordered_json& extra = {}) {
  r.elapsed_ms = ms_since(t0);
  if (g.ok) {
    r.verdict = "pass";
    r.detail = detail_pass;
  } else {
    r.verdict = "fail";
    r.detail = g.first;
    if (d != nullptr) r.repro = repro_payload(r.check_id, *d, extra);
  }
  return r;
}

CheckReport not_applicable(CheckReport r, Clock::time_point t0,
                           const std::string& why) {
  r.verdict = "not_applicable";
  r.detail = why;
  r.elapsed_ms = ms_since(t0);
  return r;
}

std::string why_not(const DiagramPredicates& pr, bool need_prime) {
  std::string s;
  if (!pr.connected) s += "disconnected; ";
  if (!pr.alternating) s += "not alternating; ";
  if (!pr.nugatory_ids.empty()) s += "nugatory crossing present; ";
  if (need_prime && !pr.prime) s += "not prime; ";
  if (!s.empty()) s.resize(s.size() - 2);
  return s;
}

// chi(G; 0, t) and chi(G; t, 0) as polynomials in t.
MultiPoly chi_x0(const DecoratedGraph& g) {
  return tutte(g).slice("x", 0).substitute({{"y", MultiPoly::var("t")}});
}
MultiPoly chi_y0(const DecoratedGraph& g) {
  return tutte(g).slice("y", 0).substitute({{"x", MultiPoly::var("t")}});
}

bool is_polygon(const DecoratedGraph& g) {
  if (g.vertex_count < 2 || g.vertex_count != static_cast<int>(g.edges.size()))
    return false;
  std::vector<int> deg(static_cast<std::size_t>(g.vertex_count), 0);
  for (const Edge& e : g.edges) {
    if (e.is_loop()) return false;
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  for (int d : deg)
    if (d != 2) return false;
  return structure(g).p0 == 1;
}

bool is_generalized_theta(const DecoratedGraph& g) {
  if (g.vertex_count != 2 || g.edges.size() < 2) return false;
  for (const Edge& e : g.edges)
    if (e.is_loop()) return false;
  return true;
}

// Two 2-gons sharing a vertex: the remaining spanning-tree-count equality
// case besides polygons and generalized theta curves.
bool is_double_2gon(const DecoratedGraph& g) {
  if (g.vertex_count != 3 || g.edges.size() != 4) return false;
  std::vector<int> deg(3, 0);
  for (const Edge& e : g.edges) {
    if (e.is_loop()) return false;
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  std::vector<int> sorted = deg;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::vector<int>{2, 2, 4}) return false;
  int center = 0;
  for (int v = 0; v < 3; ++v)
    if (deg[static_cast<std::size_t>(v)] == 4) center = v;
  for (const Edge& e : g.edges)
    if (e.u != center && e.v != center) return false;
  return true;
}

// The (2,k)-torus exemption: some checkerboard shading is a polygon.
bool torus_2k_diagram(const Diagram& d) {
  return is_polygon(to_graph(d, Shading::black_left_of_reference)) ||
         is_polygon(to_graph(d, Shading::other));
}

Int vcoeff(const MultiPoly& p, int i, int j) {
  return p.coeff({{"x", i}, {"y", j}});
}

std::string render_int(const Int& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

std::string CheckReport::line() const {
  std::string s = check_id + " " + digest + " " + verdict;
  if (!detail.empty()) s += " (" + detail + ")";
  return s;
}

std::string CheckReport::to_json_string() const {
  nlohmann::ordered_json j;
  j["check"] = check_id;
  j["digest"] = digest;
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["verdict"] = verdict;
  j["detail"] = detail;
  if (!repro.empty()) j["repro"] = nlohmann::ordered_json::parse(repro);
  j["elapsed_ms"] = elapsed_ms;
  return j.dump();
}

CheckReport check_tait1(const Diagram& d, const SkeinOptions& opt) {
  const auto t0 = Clock::now();
  CheckReport r;
  r.check_id = "tait1";
  r.digest = digest_of(d);
  const auto pr = predicates(d);
  const int n = crossing_count(d);
  if (!pr.connected || !pr.alternating || !pr.nugatory_ids.empty() || n < 1)
    return not_applicable(std::move(r), t0,
                          n < 1 ? "no crossings" : why_not(pr, false));

  const MultiPoly br = bracket(d, opt);
  const auto an = br.analyze("A");
  const auto ad = adequacy(d);
  const int sp = ad.s_plus_circles;
  const int sm = ad.s_minus_circles;

  r.lhs = "span " + std::to_string(an.span);
  r.rhs = "4n = " + std::to_string(4 * n);
  Gate g;
  g.demand(ad.plus && ad.minus, "alternating reduced diagram is not adequate");
  g.demand(an.span == 4 * n, "bracket span differs from 4n");
  g.demand(an.max_deg == n + 2 * sp - 2, "top exponent is not n+2|s+|-2");
  g.demand(an.min_deg == -n - 2 * sm + 2, "bottom exponent is not -n-2|s-|+2");
  g.demand(br.coeff({{"A", an.max_deg}}) == ((sp - 1) % 2 == 0 ? 1 : -1),
           "top coefficient is not (-1)^(|s+|-1)");
  g.demand(br.coeff({{"A", an.min_deg}}) == ((sm - 1) % 2 == 0 ? 1 : -1),
           "bottom coefficient is not (-1)^(|s-|-1)");
  g.demand(an.span == 2 * n + 2 * (sp + sm) - 4,
           "adequate span formula 2n+2(|s+|+|s-|)-4 violated");
  return finish(std::move(r), t0, g,
                "span and both extreme terms match on " + std::to_string(n) +
                    " crossings",
                &d);
}

CheckReport check_alternating_jones(const Diagram& d, const SkeinOptions& opt) {
  const auto t0 = Clock::now();
  CheckReport r;
  r.check_id = "alternating_jones";
  r.digest = digest_of(d);
  const auto pr = predicates(d);
  const int n = crossing_count(d);
  if (!pr.connected || !pr.alternating || n < 1)
    return not_applicable(std::move(r), t0,
                          n < 1 ? "no crossings" : why_not(pr, false));

  const MultiPoly V = normalized(oriented_copy(d), opt).jones;
  const auto an = V.analyze("t4");
  Gate g;
  g.demand(!an.empty, "Jones polynomial is zero");
  if (an.empty) return finish(std::move(r), t0, g, "", &d);

  // Exponents live on one lattice class mod 4 (integer or half powers of t).
  const int residue = ((an.min_deg % 4) + 4) % 4;
  g.demand(residue == 0 || residue == 2, "exponents are not t^(k/2)");
  std::vector<Int> c(static_cast<std::size_t>(an.span / 4 + 1), 0);
  for (const auto& [e, coef] : V.terms()) {
    const int exp = e[0];
    g.demand(((exp - an.min_deg) % 4) == 0, "exponent off the half-power lattice");
    if ((exp - an.min_deg) % 4 == 0)
      c[static_cast<std::size_t>((exp - an.min_deg) / 4)] = coef;
  }
  int expected = 0;  // sign(c_i) * (-1)^i, fixed across nonzero entries
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const int s = (c[i] > 0 ? 1 : -1) * (i % 2 == 0 ? 1 : -1);
    if (expected == 0) expected = s;
    g.demand(s == expected, "coefficient signs do not alternate");
  }

  std::string mode = "alternation";
  if (pr.prime && pr.reduced && !torus_2k_diagram(d)) {
    mode = "alternation + interior";
    g.demand(an.span == 4 * n, "reduced prime span differs from n");
    for (std::size_t i = 0; i < c.size(); ++i)
      g.demand(c[i] != 0, "interior zero coefficient in a non-torus prime diagram");
    g.demand(c.front() == 1 || c.front() == -1, "extreme coefficient not a unit");
    g.demand(c.back() == 1 || c.back() == -1, "extreme coefficient not a unit");
  }
  r.lhs = V.render();
  r.rhs = mode;
  return finish(std::move(r), t0, g, mode + " holds over " +
                    std::to_string(c.size()) + " lattice slots", &d);
}

CheckReport check_kidwell(const Diagram& d, std::optional<ClaspSite> clasp,
                          const SkeinOptions& opt) {
  const auto t0 = Clock::now();
  CheckReport r;
  r.check_id = "kidwell";
  r.digest = digest_of(d);
  const MultiPoly Q = q_blmho(d, opt);
  const int n = crossing_count(d);
  const int b = bridges(d).b;
  const int deg = Q.analyze("x").max_deg;
  const auto pr = predicates(d);

  nlohmann::ordered_json extra;
  if (clasp) extra["clasp"] = {{"crossing", clasp->crossing_id}, {"marker", clasp->marker}};

  r.lhs = "deg Q = " + std::to_string(deg);
  r.rhs = "n - b = " + std::to_string(n - b);
  Gate g;
  g.demand(deg <= n - b, "deg Q exceeds n - b");
  std::string what = "degree bound";
  if (pr.connected && pr.prime && pr.alternating && n > 0) {
    what += " + positive leading coefficient";
    g.demand(Q.coeff({{"x", n - 1}}) > 0,
             "coefficient of x^(n-1) is not positive");
  }
  if (clasp) {
    if (!(pr.connected && pr.prime && pr.alternating && n >= 3))
      return not_applicable(std::move(r), t0,
                            "clasp elimination needs a connected prime "
                            "alternating diagram with n >= 3");
    const Diagram d0 = smooth_crossing(d, clasp->crossing_id, clasp->marker);
    const MultiPoly Q0 = q_blmho(d0, opt);
    const int deg0 = Q0.analyze("x").max_deg;
    what += " + clasp elimination";
    g.demand(deg == n - 1, "pre-elimination degree is not n-1");
    g.demand(deg0 == n - 2, "post-elimination degree is not n-2");
    g.demand(Q.coeff({{"x", deg}}) == Q0.coeff({{"x", deg0}}),
             "leading coefficients differ across the clasp elimination");
  }
  return finish(std::move(r), t0, g, what + " on " + std::to_string(n) +
                    " crossings",
                &d, extra);
}

CheckReport check_phi_tutte(const Diagram& d, const SkeinOptions& opt) {
  const auto t0 = Clock::now();
  CheckReport r;
  r.check_id = "phi_tutte";
  r.digest = digest_of(d);
  const auto pr = predicates(d);
  const int n = crossing_count(d);
  if (!pr.connected || n < 1)
    return not_applicable(std::move(r), t0,
                          n < 1 ? "no crossings" : "disconnected");

  const ExteriorReport er = exterior(d, opt);
  const DecoratedGraph G = to_graph(d);
  const MultiPoly plus_rhs =
      chi_x0(color_subgraph(G, Color::b)) * chi_y0(color_quotient(G, Color::w));
  const MultiPoly minus_rhs =
      chi_x0(color_subgraph(G, Color::w)) * chi_y0(color_quotient(G, Color::b));

  r.lhs = "phi+ " + er.phi_plus.render() + "; phi- " + er.phi_minus.render();
  r.rhs = "phi+ " + plus_rhs.render() + "; phi- " + minus_rhs.render();
  Gate g;
  g.demand(er.phi_plus == plus_rhs, "phi+ differs from the Tutte product");
  g.demand(er.phi_minus == minus_rhs, "phi- differs from the Tutte product");
  return finish(std::move(r), t0, g,
                "both exterior slices match their checkerboard Tutte products",
                &d);
}

CheckReport check_mfw(const Diagram& d, bool amphicheiral_claimed,
                      const SkeinOptions& opt) {
  const auto t0 = Clock::now();
  if (!d.oriented)
    throw Unoriented("the skein polynomial bounds need an oriented diagram");
  CheckReport r;
  r.check_id = "mfw";
  r.digest = digest_of(d);

  const MultiPoly P = homfly(d, opt).P;
  const auto aa = P.analyze("a");
  const auto az = P.analyze("z");
  const int w = writhe(d);
  const int s = seifert(d).s;
  const int n = crossing_count(d);
  const int mu = component_count(d);
  const int bound = (aa.max_deg - aa.min_deg) / 2 + 1;

  r.lhs = "e=" + std::to_string(aa.min_deg) + " E=" + std::to_string(aa.max_deg) +
          " M=" + std::to_string(az.max_deg);
  r.rhs = "-w-(s-1)=" + std::to_string(-w - (s - 1)) +
          " -w+(s-1)=" + std::to_string(-w + (s - 1)) +
          " n-(s-1)=" + std::to_string(n - (s - 1));
  Gate g;
  g.demand(-w - (s - 1) <= aa.min_deg, "e underruns -w-(s-1)");
  g.demand(aa.max_deg <= -w + (s - 1), "E overruns -w+(s-1)");
  g.demand(az.max_deg <= n - (s - 1), "M overruns n-(s-1)");
  g.demand(az.min_deg == 1 - mu, "lowest z-degree is not 1-mu");
  if (amphicheiral_claimed)
    g.demand(std::abs(w) < s, "amphicheiral bound |w| < s violated");
  nlohmann::ordered_json extra;
  extra["amphicheiral"] = amphicheiral_claimed;
  return finish(std::move(r), t0, g,
                "bounds hold; braid index >= " + std::to_string(bound), &d,
                extra);
}

CheckReport check_positivity(const Diagram& d, const SkeinOptions& opt) {
  const auto t0 = Clock::now();
  if (!d.oriented)
    throw Unoriented("diagram positivity needs an oriented diagram");
  CheckReport r;
  r.check_id = "positivity";
  r.digest = digest_of(d);

  const MultiPoly P = homfly(d, opt).P;
  const int n = crossing_count(d);
  const int w = writhe(d);
  const int s = seifert(d).s;
  const bool positive = (n == w);
  const bool negative = (n == -w);
  const Int corner_E = P.coeff({{"a", -w + (s - 1)}, {"z", n - (s - 1)}});
  const Int corner_e = P.coeff({{"a", -w - (s - 1)}, {"z", n - (s - 1)}});

  r.lhs = "corner(a^E z^M) " + render_int(corner_E) + "; corner(a^e z^M) " +
          render_int(corner_e);
  r.rhs = positive ? "positive diagram" : negative ? "negative diagram"
                                                   : "mixed signs";
  Gate g;
  g.demand((corner_E != 0) == positive,
           "a^(-w+s-1) z^(n-s+1) corner does not match positivity");
  g.demand((corner_e != 0) == negative,
           "a^(-w-s+1) z^(n-s+1) corner does not match negativity");

  // The orientation state never touches itself.
  KauffmanState seifert_state;
  const auto signs = crossing_signs(d);
  for (std::size_t k = 0; k < d.crossings.size(); ++k)
    seifert_state.marker[d.crossings[k].id] = signs[k];
  const auto res = resolve(d, seifert_state);
  for (const auto& [cid, touch] : res.self_touch)
    g.demand(!touch, "orientation state touches itself at crossing " +
                         std::to_string(cid));
  g.demand(res.circle_count == s, "orientation state circle count is not s");

  if ((positive || negative) && n >= 1) {
    const auto az = P.analyze("z");
    const auto aa = P.analyze("a");
    g.demand(az.max_deg == n - (s - 1), "M is not n-(s-1)");
    if (positive) {
      g.demand(aa.max_deg == -(n - (s - 1)), "E is not -(n-(s-1))");
      try {
        const auto ad = adequacy(d);
        g.demand(ad.plus, "positive diagram is not +-adequate");
        g.demand(ad.s_plus_circles == s, "|s+| differs from s");
      } catch (const NotApplicable&) {
      }
    } else {
      g.demand(aa.min_deg == n - (s - 1), "e is not n-(s-1)");
      try {
        const auto ad = adequacy(d);
        g.demand(ad.minus, "negative diagram is not --adequate");
        g.demand(ad.s_minus_circles == s, "|s-| differs from s");
      } catch (const NotApplicable&) {
      }
    }
  }
  return finish(std::move(r), t0, g, r.rhs + ", corners as predicted", &d);
}

CheckReport check_adequate_rigidity(const Diagram& d1, const Diagram& d2,
                                    const SkeinOptions& opt) {
  const auto t0 = Clock::now();
  CheckReport r;
  r.check_id = "adequate_rigidity";
  r.digest = digest_of(d1, d2);

  const Diagram o1 = oriented_copy(d1);
  const Diagram o2 = oriented_copy(d2);
  const KauffmanPair k1 = kauffman(o1, opt);
  const KauffmanPair k2 = kauffman(o2, opt);
  const int t1 = writhe(o1);
  const int t2 = writhe(o2);
  const int n1 = crossing_count(d1);
  const int n2 = crossing_count(d2);

  nlohmann::ordered_json extra;
  extra["input2"] = diagram_json(d2);

  r.lhs = k1.F.render();
  r.rhs = k2.F.render();
  if (k1.F != k2.F) {
    Gate g;
    g.demand(false,
             "F values differ: the claimed isotopy is refuted by the invariant");
    return finish(std::move(r), t0, g, "", &d1, extra);
  }

  auto flags = [](const Diagram& d) {
    try {
      return adequacy(d);
    } catch (const NotApplicable&) {
      return AdequacyReport{};
    }
  };
  const auto a1 = flags(d1);
  const auto a2 = flags(d2);

  Gate g;
  g.demand(k1.lambda ==
               MultiPoly::monomial(1, {{"a", t1 - t2}}) * k2.lambda,
           "lambda values are not related by a^(Tait1-Tait2)");
  if (a1.plus) g.demand(t1 - t2 >= n1 - n2, "+-adequate writhe ordering violated");
  if (a1.minus) g.demand(t1 - t2 <= n2 - n1, "--adequate writhe ordering violated");
  if (a2.plus) g.demand(t2 - t1 >= n2 - n1, "+-adequate writhe ordering violated");
  if (a2.minus) g.demand(t2 - t1 <= n1 - n2, "--adequate writhe ordering violated");
  if (a1.plus && a1.minus && n1 == n2) {
    g.demand(a2.plus && a2.minus, "adequate partner diagram is not adequate");
    g.demand(t1 == t2, "adequate diagrams with equal n disagree on Tait");
  }

  std::ostringstream detail;
  detail << "F values agree (evidence of isotopy, not proof); lambda(D1) = a^"
         << (t1 - t2) << " lambda(D2); Tait " << t1 << " vs " << t2
         << "; adequacy D1(" << (a1.plus ? "+" : "") << (a1.minus ? "-" : "")
         << ") D2(" << (a2.plus ? "+" : "") << (a2.minus ? "-" : "") << ")";
  return finish(std::move(r), t0, g, detail.str(), &d1, extra);
}

CheckReport check_tree_like(const Diagram& d, const SkeinOptions& opt) {
  const auto t0 = Clock::now();
  if (!d.oriented)
    throw Unoriented("tree-like structure needs an oriented diagram");
  CheckReport r;
  r.check_id = "tree_like";
  r.digest = digest_of(d);

  const SeifertReport sr = seifert(d);
  if (!sr.simplified_tree_like)
    return not_applicable(std::move(r), t0, "not a simplified tree-like diagram");

  const MultiPoly P = homfly(d, opt).P;
  const int n = crossing_count(d);
  const int w = writhe(d);
  const int M = P.analyze("z").max_deg;
  const MultiPoly top = P.slice("z", M);
  const MultiPoly want =
      MultiPoly::monomial(1, {{"a", -w + sr.d_plus - sr.d_minus}});

  r.lhs = "M=" + std::to_string(M) + ", b_M = " + top.render();
  r.rhs = "n-(s-1)=" + std::to_string(n - (sr.s - 1)) + ", a^" +
          std::to_string(-w + sr.d_plus - sr.d_minus);
  Gate g;
  g.demand(M == n - (sr.s - 1), "top z-degree is not n-(s-1)");
  g.demand(top == want, "z^M coefficient is not the predicted monomial");
  return finish(std::move(r), t0, g, "tree-like top coefficient matches", &d);
}

namespace {

CheckReport corpus_report(const std::string& id, const std::string& digest_seed) {
  CheckReport r;
  r.check_id = id;
  r.digest = hex64(fnv1a(digest_seed));
  return r;
}

CheckReport graph_coefficients_report() {
  const auto t0 = Clock::now();
  CheckReport r = corpus_report("graph_corpus.coefficients",
                                "all connected multigraphs <= 6 edges + K4");
  auto corpus = all_connected_multigraphs(6);
  corpus.push_back(make_complete(4));
  Gate g;
  std::string at;
  for (const DecoratedGraph& gr : corpus) {
    const MultiPoly chi = tutte(gr);
    const auto st = structure(gr);
    const int E = static_cast<int>(gr.edges.size());
    const int dG = gr.vertex_count - 1;
    int loops = 0, isthmuses = 0;
    for (const Edge& e : gr.edges) loops += e.is_loop() ? 1 : 0;
    isthmuses = static_cast<int>(st.isthmus_ids.size());

    Gate local;
    for (const auto& [exps, coef] : chi.terms())
      local.demand(coef > 0, "negative Tutte coefficient");
    local.demand(vcoeff(chi, 0, 0) == (E > 0 ? 0 : 1), "v00 mismatch");
    local.demand(vcoeff(chi, dG, loops) == 1, "v(d,loops) is not 1");
    local.demand(chi.analyze("x").max_deg == (E > 0 ? dG : 0),
                 "top x-degree is not d(G)");
    local.demand(vcoeff(chi, isthmuses, st.p1) == 1, "v(isthmus,p1) is not 1");
    local.demand(chi.analyze("y").max_deg == st.p1, "top y-degree is not p1");
    if (st.is_2connected && E >= 2) {
      for (int j = 0; j <= st.p1 + 1; ++j)
        local.demand((vcoeff(chi, 0, j) > 0) == (1 <= j && j <= st.p1),
                     "v(0,j) support differs from 1..p1");
      for (int i = 0; i <= dG + 1; ++i)
        local.demand((vcoeff(chi, i, 0) > 0) == (1 <= i && i <= dG),
                     "v(i,0) support differs from 1..d");
      if (!is_polygon(gr) && !is_generalized_theta(gr))
        local.demand(vcoeff(chi, 1, 1) > 0, "v11 vanishes off the known cases");
    }
    if (!local.ok && g.ok) {
      g.demand(false, local.first + " [" + canonical_code(gr) + "]");
      at = canonical_code(gr);
    }
  }
  r.lhs = std::to_string(corpus.size()) + " graphs";
  r.rhs = "coefficient structure";
  r.elapsed_ms = ms_since(t0);
  if (g.ok) {
    r.verdict = "pass";
    r.detail = "coefficient structure holds on " +
               std::to_string(corpus.size()) + " graphs";
  } else {
    r.verdict = "fail";
    r.detail = g.first;
    nlohmann::ordered_json j;
    j["check"] = r.check_id;
    j["canonical_code"] = at;
    r.repro = j.dump();
  }
  return r;
}

CheckReport graph_spanning_trees_report() {
  const auto t0 = Clock::now();
  CheckReport r = corpus_report("graph_corpus.spanning_trees",
                                "loopless isthmus-free connected <= 6 edges + K4");
  auto corpus = all_connected_multigraphs(6);
  corpus.push_back(make_complete(4));
  Gate g;
  int tested = 0;
  std::string at;
  for (const DecoratedGraph& gr : corpus) {
    const auto st = structure(gr);
    const int E = static_cast<int>(gr.edges.size());
    if (E == 0 || !st.loop_ids.empty() || !st.isthmus_ids.empty()) continue;
    ++tested;
    const Int tau = tutte(gr).eval({{"x", 1}, {"y", 1}});
    Gate local;
    local.demand(tau == spanning_trees(gr).count,
                 "chi(1,1) differs from the matrix-tree count");
    local.demand(tau >= E, "spanning trees undercut the edge count");
    const bool equality_case =
        is_polygon(gr) || is_generalized_theta(gr) || is_double_2gon(gr);
    local.demand((tau == E) == equality_case,
                 "equality case classification failed");
    if (!local.ok && g.ok) {
      g.demand(false, local.first + " [" + canonical_code(gr) + "]");
      at = canonical_code(gr);
    }
  }
  const DecoratedGraph k4 = make_complete(4);
  const Int tau4 = tutte(k4).eval({{"x", 1}, {"y", 1}});
  g.demand(tau4 == 16, "K4 spanning tree count is not 16");
  g.demand(tau4 == Int(static_cast<int>(k4.edges.size())) + 10,
           "K4 misses the |E|+10 boundary");
  r.lhs = std::to_string(tested) + " loopless isthmus-free graphs";
  r.rhs = "tau >= |E| with classified equality";
  r.elapsed_ms = ms_since(t0);
  if (g.ok) {
    r.verdict = "pass";
    r.detail = "tau bounds and equality cases hold on " +
               std::to_string(tested) + " graphs";
  } else {
    r.verdict = "fail";
    r.detail = g.first;
    nlohmann::ordered_json j;
    j["check"] = r.check_id;
    j["canonical_code"] = at;
    r.repro = j.dump();
  }
  return r;
}

CheckReport graph_duality_report() {
  const auto t0 = Clock::now();
  CheckReport r = corpus_report("graph_corpus.duality",
                                "embedded cycles, thetas, random plane graphs");
  std::vector<DecoratedGraph> instances;
  for (int k = 2; k <= 6; ++k) instances.push_back(make_cycle(k, true));
  for (int k = 2; k <= 5; ++k) instances.push_back(make_theta(k, true));
  std::mt19937 rng(424243u);
  for (int i = 0; i < 10; ++i)
    instances.push_back(random_plane_2connected(rng, 4 + i % 5));

  const std::map<std::string, MultiPoly> swap_xy{
      {"x", MultiPoly::var("y")}, {"y", MultiPoly::var("x")}};
  const std::map<std::string, MultiPoly> swap_ab{
      {"A", MultiPoly::var("B")}, {"B", MultiPoly::var("A")}};
  Gate g;
  for (const DecoratedGraph& gr : instances) {
    const DecoratedGraph dual = faces_and_dual(gr).dual;
    g.demand(tutte(gr) == tutte(dual).substitute(swap_xy),
             "Tutte polynomial does not swap x,y under duality [" +
                 canonical_code(gr) + "]");
    g.demand(graph_bracket(gr) == graph_bracket(dual).substitute(swap_ab),
             "graph bracket does not swap A,B under duality [" +
                 canonical_code(gr) + "]");
  }
  r.lhs = std::to_string(instances.size()) + " embedded graphs";
  r.rhs = "chi(G;x,y) = chi(G*;y,x)";
  r.elapsed_ms = ms_since(t0);
  r.verdict = g.ok ? "pass" : "fail";
  r.detail = g.ok ? "duality swaps variables on " +
                        std::to_string(instances.size()) + " embedded graphs"
                  : g.first;
  return r;
}

CheckReport k4_fixture_report() {
  const auto t0 = Clock::now();
  CheckReport r = corpus_report("graph_corpus.k4_fixture", "K4");
  const MultiPoly chi = tutte(make_complete(4));
  MultiPoly expect = MultiPoly::var("x", 3) + MultiPoly(3) * MultiPoly::var("x", 2) +
                     MultiPoly(2) * MultiPoly::var("x") +
                     MultiPoly(4) * MultiPoly::var("x") * MultiPoly::var("y") +
                     MultiPoly(2) * MultiPoly::var("y") +
                     MultiPoly(3) * MultiPoly::var("y", 2) +
                     MultiPoly::var("y", 3);
  Gate g;
  g.demand(chi == expect, "K4 Tutte polynomial mismatch");
  // The minor chain x^d + ... + x + y + ... + y^p1 sits inside coefficientwise.
  for (int i = 1; i <= 3; ++i) {
    g.demand(vcoeff(chi, i, 0) >= 1, "chain term x^i missing");
    g.demand(vcoeff(chi, 0, i) >= 1, "chain term y^i missing");
  }
  r.lhs = chi.render();
  r.rhs = expect.render();
  r.elapsed_ms = ms_since(t0);
  r.verdict = g.ok ? "pass" : "fail";
  r.detail = g.ok ? "K4 value and its summand chain verified" : g.first;
  return r;
}

}  // namespace

std::vector<CheckReport> check_graph_corpus() {
  std::vector<CheckReport> out;
  out.push_back(graph_coefficients_report());
  out.push_back(graph_spanning_trees_report());
  out.push_back(graph_duality_report());
  out.push_back(k4_fixture_report());
  return out;
}

std::vector<std::string> check_ids() {
  return {"alternating_jones", "kidwell",     "mfw",      "phi_tutte",
          "positivity",        "tait1",       "tree_like"};
}

namespace {

CheckReport dispatch(const std::string& id, const Diagram& d,
                     const SkeinOptions& opt) {
  if (id == "tait1") return check_tait1(d, opt);
  if (id == "alternating_jones") return check_alternating_jones(d, opt);
  if (id == "kidwell") return check_kidwell(d, std::nullopt, opt);
  if (id == "phi_tutte") return check_phi_tutte(d, opt);
  if (id == "mfw") return check_mfw(d, false, opt);
  if (id == "positivity") return check_positivity(d, opt);
  if (id == "tree_like") return check_tree_like(d, opt);
  throw UnknownElement("no check named " + id);
}

}  // namespace

std::vector<CheckReport> run_checks(const std::vector<std::string>& ids,
                                    const std::vector<Diagram>& inputs,
                                    const SkeinOptions& opt) {
  struct Task {
    std::size_t id_index;
    std::size_t input_index;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t k = 0; k < inputs.size(); ++k) tasks.push_back({i, k});

  std::vector<CheckReport> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  const unsigned workers = std::max(
      1u, std::min(std::thread::hardware_concurrency(),
                   static_cast<unsigned>(tasks.size())));
  auto work = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        results[i] =
            dispatch(ids[tasks[i].id_index], inputs[tasks[i].input_index], opt);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::stable_sort(results.begin(), results.end(),
                   [](const CheckReport& a, const CheckReport& b) {
                     if (a.check_id != b.check_id) return a.check_id < b.check_id;
                     return a.digest < b.digest;
                   });
  return results;
}

CheckReport rerun_from_repro(const std::string& repro_json) {
  const auto j = nlohmann::ordered_json::parse(repro_json);
  const std::string id = j.at("check").get<std::string>();
  if (id == "adequate_rigidity") {
    const Diagram d1 = Diagram::from_json_string(j.at("input").dump());
    const Diagram d2 = Diagram::from_json_string(j.at("input2").dump());
    return check_adequate_rigidity(d1, d2);
  }
  const Diagram d = Diagram::from_json_string(j.at("input").dump());
  if (id == "kidwell" && j.contains("clasp")) {
    ClaspSite site{j["clasp"].at("crossing").get<int>(),
                   j["clasp"].at("marker").get<int>()};
    return check_kidwell(d, site);
  }
  if (id == "mfw")
    return check_mfw(d, j.value("amphicheiral", false));
  return dispatch(id, d, SkeinOptions{});
}

std::vector<Diagram> alternating_corpus(unsigned seed, int count,
                                        int max_crossings) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> ed(2, std::max(2, max_crossings));
  std::vector<Diagram> out;
  for (int i = 0; i < count; ++i) {
    DecoratedGraph g = random_plane_2connected(rng, ed(rng));
    for (Edge& e : g.edges) {
      e.color = Color::b;
      e.sign.reset();
    }
    out.push_back(ingest_graph(g));
  }
  return out;
}

}  // namespace gp
