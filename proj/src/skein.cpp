#include "gp/skein.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gp/errors.hpp"

namespace gp {

namespace {

MultiPoly apow(int k) {
  if (k == 0) return MultiPoly(1);
  return MultiPoly::var("a", k);
}

MultiPoly minus_a3_pow(int k) {
  return MultiPoly::monomial(k % 2 == 0 ? Int(1) : Int(-1), {{"A", 3 * k}});
}

MultiPoly delta_poly() {
  return -(MultiPoly::var("A", 2) + MultiPoly::var("A", -2));
}

int var_pos(const MultiPoly& p, const std::string& v) {
  const auto& vs = p.vars();
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (vs[i] == v) return static_cast<int>(i);
  return -1;
}

MultiPoly bracket_state_sum(const Diagram& d, int cap) {
  const int n = crossing_count(d);
  if (n > cap)
    throw SizeCap("bracket state sum over " + std::to_string(n) +
                  " crossings exceeds the cap of " + std::to_string(cap));
  if (n == 0) {
    if (d.extra_circles <= 0) return MultiPoly(1);
    return delta_poly().pow(d.extra_circles - 1);
  }

  std::map<int, int> idx;
  for (const Crossing& c : d.crossings)
    for (int a : c.arcs) idx.emplace(a, static_cast<int>(idx.size()));
  const int arcs = static_cast<int>(idx.size());
  std::vector<std::array<int, 4>> quads(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 4; ++j)
      quads[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          idx.at(d.crossings[static_cast<std::size_t>(i)].arcs[static_cast<std::size_t>(j)]);

  std::vector<int> parent(static_cast<std::size_t>(arcs));
  int classes = 0;
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) {
      parent[static_cast<std::size_t>(x)] = y;
      --classes;
    }
  };

  // Tally states by (A-exponent from markers, circle count); the delta
  // powers are expanded once at the end.
  std::map<std::pair<int, int>, Int> tally;
  const unsigned long long states = 1ull << n;
  for (unsigned long long mask = 0; mask < states; ++mask) {
    for (int i = 0; i < arcs; ++i) parent[static_cast<std::size_t>(i)] = i;
    classes = arcs;
    int a_count = 0;
    for (int i = 0; i < n; ++i) {
      const auto& q = quads[static_cast<std::size_t>(i)];
      if (mask >> i & 1ull) {
        ++a_count;
        unite(q[0], q[1]);
        unite(q[2], q[3]);
      } else {
        unite(q[0], q[3]);
        unite(q[1], q[2]);
      }
    }
    tally[{2 * a_count - n, classes + d.extra_circles}] += 1;
  }

  std::map<int, Int> coeffs;
  for (const auto& [key, count] : tally) {
    const int diff = key.first;
    const int k = key.second - 1;  // delta power
    std::vector<Int> binom(static_cast<std::size_t>(k) + 1);
    binom[0] = 1;
    for (int j = 1; j <= k; ++j)
      binom[static_cast<std::size_t>(j)] =
          binom[static_cast<std::size_t>(j - 1)] * (k - j + 1) / j;
    const Int signed_count = k % 2 == 0 ? count : -count;
    for (int j = 0; j <= k; ++j)
      coeffs[diff + 4 * j - 2 * k] += signed_count * binom[static_cast<std::size_t>(j)];
  }
  std::vector<std::pair<std::vector<int>, Int>> terms;
  for (const auto& [e, c] : coeffs)
    if (c != 0) terms.push_back({{e}, c});
  return MultiPoly::from_parts({"A"}, terms);
}

void check_recursion_cap(const Diagram& d, int cap) {
  const int n = crossing_count(d);
  if (n > cap)
    throw SizeCap("skein recursion over " + std::to_string(n) +
                  " crossings exceeds the cap of " + std::to_string(cap));
}

// First (or last) crossing whose first visit along the fixed traversal is
// an under-pass; -1 when the diagram is descending.
int find_pivot(const Diagram& d, PivotPolicy policy) {
  const auto passages = strand_passages(d);
  std::set<int> seen;
  int last = -1;
  for (const auto& comp : passages)
    for (const auto& [cid, kind] : comp)
      if (seen.insert(cid).second && kind == 'U') {
        if (policy == PivotPolicy::first_bad) return cid;
        last = cid;
      }
  return last;
}

int sign_of(const Diagram& d, int crossing_id) {
  const std::vector<int> signs = crossing_signs(d);
  for (std::size_t i = 0; i < d.crossings.size(); ++i)
    if (d.crossings[i].id == crossing_id) return signs[i];
  throw PreconditionViolated("no crossing with id " + std::to_string(crossing_id));
}

// Memo key: quads with arcs relabeled by first appearance, plus circle
// count; oriented recursions append crossing signs (links whose sign
// vectors agree differ at most by reversing split parts, which the
// oriented polynomials here cannot see).
std::string diagram_key(const Diagram& d, bool with_signs) {
  std::ostringstream os;
  std::map<int, int> relabel;
  for (const Crossing& c : d.crossings)
    for (int a : c.arcs)
      os << relabel.emplace(a, static_cast<int>(relabel.size())).first->second << ',';
  os << '|' << d.extra_circles;
  if (with_signs) {
    os << '|';
    for (int s : crossing_signs(d)) os << (s > 0 ? '+' : '-');
  }
  return os.str();
}

// Writhe of a descending diagram; independent of the orientation choice
// because descending components are pairwise unlinked.
int leaf_writhe(const Diagram& d) {
  if (d.crossings.empty()) return 0;
  Diagram od = d;
  od.oriented = true;
  od.dirs.clear();
  return writhe(od);
}

class LambdaEngine {
 public:
  explicit LambdaEngine(const SkeinOptions& opt) : opt_(opt) {}

  MultiPoly run(const Diagram& d) {
    const int pivot = find_pivot(d, opt_.policy);
    if (pivot < 0) {
      const MultiPoly base =
          (MultiPoly::var("a") + MultiPoly::var("a", -1)) * MultiPoly::var("x", -1) -
          MultiPoly(1);
      return apow(leaf_writhe(d)) * base.pow(component_count(d) - 1);
    }
    std::string key;
    if (opt_.memo) {
      key = diagram_key(d, false);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    MultiPoly res = MultiPoly::var("x") * (run(smooth_crossing(d, pivot, 1)) +
                                           run(smooth_crossing(d, pivot, -1))) -
                    run(switch_crossing(d, pivot));
    if (opt_.memo) memo_.emplace(std::move(key), res);
    return res;
  }

 private:
  SkeinOptions opt_;
  std::map<std::string, MultiPoly> memo_;
};

class QEngine {
 public:
  explicit QEngine(const SkeinOptions& opt) : opt_(opt) {}

  MultiPoly run(const Diagram& d) {
    const int pivot = find_pivot(d, opt_.policy);
    if (pivot < 0) {
      const MultiPoly base = MultiPoly::monomial(2, {{"x", -1}}) - MultiPoly(1);
      return base.pow(component_count(d) - 1);
    }
    std::string key;
    if (opt_.memo) {
      key = diagram_key(d, false);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    MultiPoly res = MultiPoly::var("x") * (run(smooth_crossing(d, pivot, 1)) +
                                           run(smooth_crossing(d, pivot, -1))) -
                    run(switch_crossing(d, pivot));
    if (opt_.memo) memo_.emplace(std::move(key), res);
    return res;
  }

 private:
  SkeinOptions opt_;
  std::map<std::string, MultiPoly> memo_;
};

class HomflyEngine {
 public:
  explicit HomflyEngine(const SkeinOptions& opt) : opt_(opt) {}

  MultiPoly run(const Diagram& d) {
    const int pivot = find_pivot(d, opt_.policy);
    if (pivot < 0) {
      const MultiPoly base =
          (MultiPoly::var("a") + MultiPoly::var("a", -1)) * MultiPoly::var("z", -1);
      return base.pow(component_count(d) - 1);
    }
    std::string key;
    if (opt_.memo) {
      key = diagram_key(d, true);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    const int sign = sign_of(d, pivot);
    const MultiPoly smoothed = run(smooth_crossing(d, pivot, sign, true));
    const MultiPoly switched = run(switch_crossing(d, pivot));
    MultiPoly res =
        sign > 0 ? MultiPoly::var("a", -1) * MultiPoly::var("z") * smoothed -
                       MultiPoly::var("a", -2) * switched
                 : MultiPoly::var("a") * MultiPoly::var("z") * smoothed -
                       MultiPoly::var("a", 2) * switched;
    if (opt_.memo) memo_.emplace(std::move(key), res);
    return res;
  }

 private:
  SkeinOptions opt_;
  std::map<std::string, MultiPoly> memo_;
};

class ConwayEngine {
 public:
  explicit ConwayEngine(const SkeinOptions& opt) : opt_(opt) {}

  MultiPoly run(const Diagram& d) {
    const int pivot = find_pivot(d, opt_.policy);
    if (pivot < 0) return component_count(d) == 1 ? MultiPoly(1) : MultiPoly();
    std::string key;
    if (opt_.memo) {
      key = diagram_key(d, true);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    const int sign = sign_of(d, pivot);
    const MultiPoly smoothed = run(smooth_crossing(d, pivot, sign, true));
    const MultiPoly switched = run(switch_crossing(d, pivot));
    const MultiPoly step = MultiPoly::var("z") * smoothed;
    MultiPoly res = sign > 0 ? switched + step : switched - step;
    if (opt_.memo) memo_.emplace(std::move(key), res);
    return res;
  }

 private:
  SkeinOptions opt_;
  std::map<std::string, MultiPoly> memo_;
};

MultiPoly jones_from_f(const MultiPoly& f) {
  const int pos = var_pos(f, "A");
  if (f.is_zero() || pos < 0) return f;
  std::vector<std::pair<std::vector<int>, Int>> terms;
  for (const auto& [exps, c] : f.terms())
    terms.push_back({{-exps[static_cast<std::size_t>(pos)]}, c});
  return MultiPoly::from_parts({"t4"}, terms);
}

// Exact division of a univariate Laurent polynomial in a by a^2 + 1.
MultiPoly divide_by_a2_plus_1(const MultiPoly& p) {
  if (p.is_zero()) return p;
  const int pos = var_pos(p, "a");
  std::map<int, Int> work;
  for (const auto& [exps, c] : p.terms())
    work[pos < 0 ? 0 : exps[static_cast<std::size_t>(pos)]] += c;
  const int lo = work.begin()->first;
  std::map<int, Int> quot;
  while (!work.empty()) {
    auto it = std::prev(work.end());
    const int e = it->first;
    const Int c = it->second;
    work.erase(it);
    if (c == 0) continue;
    if (e - 2 < lo)
      throw PreconditionViolated("internal: quotient by a^2+1 is not exact");
    quot[e - 2] += c;
    work[e - 2] -= c;
    if (work[e - 2] == 0) work.erase(e - 2);
  }
  std::vector<std::pair<std::vector<int>, Int>> terms;
  for (const auto& [e, c] : quot)
    if (c != 0) terms.push_back({{e}, c});
  return MultiPoly::from_parts({"a"}, terms);
}

// lambda(a, x = a + a^{-1}), computed through the x-shifted polynomial so
// every substituted exponent stays nonnegative, then divided back out.
MultiPoly eval_lambda_at_a_plus_ainv(const MultiPoly& lambda) {
  if (lambda.is_zero()) return lambda;
  const auto ax = lambda.analyze("x");
  const int shift = std::max(0, -ax.min_deg);
  MultiPoly shifted = shift == 0 ? lambda : lambda * MultiPoly::var("x", shift);
  MultiPoly value = shifted.substitute(
      {{"x", MultiPoly::var("a") + MultiPoly::var("a", -1)}});
  if (shift == 0) return value;
  value = value * MultiPoly::var("a", shift);
  for (int i = 0; i < shift; ++i) value = divide_by_a2_plus_1(value);
  return value;
}

}  // namespace

MultiPoly bracket(const Diagram& d, const SkeinOptions& opt) {
  return bracket_state_sum(d, opt.state_sum_cap);
}

NormalizedBracket normalized(const Diagram& d, const SkeinOptions& opt) {
  if (!d.oriented) throw Unoriented("normalized brackets need an oriented diagram");
  const MultiPoly br = bracket(d, opt);
  const LinkingReport lk = linking(d);
  NormalizedBracket out;
  out.f_hat = minus_a3_pow(-lk.sw) * br;
  out.f = minus_a3_pow(-writhe(d)) * br;
  out.jones = jones_from_f(out.f);
  return out;
}

MultiPoly generalized_bracket(const Diagram& d, const SkeinOptions& opt) {
  const MultiPoly br = bracket(d, opt);
  const int n = crossing_count(d);
  if (br.is_zero()) return br;
  const int pos = var_pos(br, "A");
  std::vector<std::pair<std::vector<int>, Int>> terms;
  for (const auto& [exps, c] : br.terms()) {
    const int i = pos < 0 ? 0 : exps[static_cast<std::size_t>(pos)];
    if ((n + i) % 2 != 0)
      throw PreconditionViolated("internal: bracket exponent parity is off");
    terms.push_back({{(n + i) / 2, (n - i) / 2}, c});
  }
  return MultiPoly::from_parts({"A", "B"}, terms);
}

MultiPoly q_blmho(const Diagram& d, const SkeinOptions& opt) {
  check_recursion_cap(d, opt.recursion_cap);
  return QEngine(opt).run(d);
}

KauffmanPair kauffman(const Diagram& d, const SkeinOptions& opt) {
  check_recursion_cap(d, opt.recursion_cap);
  KauffmanPair out;
  out.lambda = LambdaEngine(opt).run(d);
  if (d.oriented) out.F = apow(-writhe(d)) * out.lambda;
  return out;
}

HomflyPair homfly(const Diagram& d, const SkeinOptions& opt) {
  if (!d.oriented) throw Unoriented("the skein polynomial needs an oriented diagram");
  check_recursion_cap(d, opt.recursion_cap);
  HomflyPair out;
  out.P = HomflyEngine(opt).run(d);
  out.P_hat = apow(writhe(d)) * out.P;
  return out;
}

MultiPoly conway(const Diagram& d, const SkeinOptions& opt) {
  if (!d.oriented) throw Unoriented("the Conway polynomial needs an oriented diagram");
  check_recursion_cap(d, opt.recursion_cap);
  return ConwayEngine(opt).run(d);
}

ExteriorReport exterior(const Diagram& d, const SkeinOptions& opt) {
  ExteriorReport out;
  const KauffmanPair kp = kauffman(d, opt);
  const HomflyPair hp = homfly(d, opt);
  const int n = crossing_count(d);

  const int la = var_pos(kp.lambda, "a");
  const int lx = var_pos(kp.lambda, "x");
  std::vector<std::pair<std::vector<int>, Int>> plus, minus;
  for (const auto& [exps, c] : kp.lambda.terms()) {
    const int r = la < 0 ? 0 : exps[static_cast<std::size_t>(la)];
    const int s = lx < 0 ? 0 : exps[static_cast<std::size_t>(lx)];
    if (r + s == n) plus.push_back({{r}, c});
    if (s - r == n) minus.push_back({{-r}, c});
  }
  out.phi_plus = MultiPoly::from_parts({"t"}, plus);
  out.phi_minus = MultiPoly::from_parts({"t"}, minus);

  const int pa = var_pos(hp.P_hat, "a");
  const int pz = var_pos(hp.P_hat, "z");
  plus.clear();
  minus.clear();
  for (const auto& [exps, c] : hp.P_hat.terms()) {
    const int i = pa < 0 ? 0 : exps[static_cast<std::size_t>(pa)];
    const int j = pz < 0 ? 0 : exps[static_cast<std::size_t>(pz)];
    if (i + j == n) plus.push_back({{i}, c});
    if (j - i == n) minus.push_back({{i}, c});
  }
  out.psi_plus = MultiPoly::from_parts({"a"}, plus);
  out.psi_minus = MultiPoly::from_parts({"a"}, minus);

  out.lambda_at_x_eq_a_plus_ainv = eval_lambda_at_a_plus_ainv(kp.lambda);
  return out;
}

}  // namespace gp
