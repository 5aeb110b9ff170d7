#include "gp/poly.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <set>

#include "json.hpp"

namespace gp {

namespace {

// true if a's component comes strictly before b's in canonical order
int cmp_exp(int a, int b) {
  int aa = std::abs(a), ab = std::abs(b);
  if (aa != ab) return aa > ab ? -1 : 1;
  if (a == b) return 0;
  return a > b ? -1 : 1;  // same magnitude: positive first
}

}  // namespace

bool TermOrder::operator()(const std::vector<int>& a,
                           const std::vector<int>& b) const {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    int c = cmp_exp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

MultiPoly::MultiPoly(const Int& c) {
  if (c != 0) terms_[{}] = c;
}

MultiPoly::MultiPoly(long long c) : MultiPoly(Int(c)) {}

MultiPoly MultiPoly::var(const std::string& name, int exp) {
  return monomial(1, {{name, exp}});
}

MultiPoly MultiPoly::monomial(
    const Int& c, const std::vector<std::pair<std::string, int>>& pows) {
  MultiPoly p;
  if (c == 0) return p;
  std::map<std::string, int> m;
  for (const auto& [name, e] : pows) m[name] += e;
  std::vector<int> exp;
  for (const auto& [name, e] : m) {
    p.vars_.push_back(name);
    exp.push_back(e);
  }
  p.terms_[exp] = c;
  p.normalize();
  return p;
}

void MultiPoly::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second == 0 ? terms_.erase(it) : std::next(it);
  if (terms_.empty()) {
    vars_.clear();
    return;
  }
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) used[i] = true;
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
  std::vector<std::string> nv;
  for (size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) nv.push_back(vars_[i]);
  Terms nt;
  for (const auto& [e, c] : terms_) {
    std::vector<int> ne;
    for (size_t i = 0; i < e.size(); ++i)
      if (used[i]) ne.push_back(e[i]);
    nt[ne] += c;
  }
  vars_ = std::move(nv);
  terms_ = std::move(nt);
}

MultiPoly MultiPoly::aligned_to(const std::vector<std::string>& universe) const {
  MultiPoly r;
  r.vars_ = universe;
  std::vector<int> pos(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::lower_bound(universe.begin(), universe.end(), vars_[i]);
    pos[i] = static_cast<int>(it - universe.begin());
  }
  for (const auto& [e, c] : terms_) {
    std::vector<int> ne(universe.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
    r.terms_[ne] = c;
  }
  return r;
}

MultiPoly merge_add(const MultiPoly& a, const MultiPoly& b, int sgn) {
  std::vector<std::string> uni;
  std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(),
                 b.vars_.end(), std::back_inserter(uni));
  MultiPoly ra = a.aligned_to(uni);
  MultiPoly rb = b.aligned_to(uni);
  for (const auto& [e, c] : rb.terms_) ra.terms_[e] += sgn * c;
  ra.normalize();
  return ra;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  return merge_add(*this, o, 1);
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  return merge_add(*this, o, -1);
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  std::vector<std::string> uni;
  std::set_union(vars_.begin(), vars_.end(), o.vars_.begin(), o.vars_.end(),
                 std::back_inserter(uni));
  MultiPoly ra = aligned_to(uni);
  MultiPoly rb = o.aligned_to(uni);
  MultiPoly r;
  r.vars_ = uni;
  for (const auto& [ea, ca] : ra.terms_)
    for (const auto& [eb, cb] : rb.terms_) {
      std::vector<int> e(uni.size());
      for (size_t i = 0; i < uni.size(); ++i) e[i] = ea[i] + eb[i];
      r.terms_[e] += ca * cb;
    }
  r.normalize();
  return r;
}

MultiPoly MultiPoly::pow(int k) const {
  if (k == 0) return MultiPoly(1);
  if (k < 0) {
    if (terms_.size() != 1)
      throw SubstitutionNotLaurent(
          "negative power of a non-monomial polynomial");
    const auto& [e, c] = *terms_.begin();
    if (c != 1 && c != -1)
      throw SubstitutionNotLaurent(
          "negative power needs coefficient +1 or -1, got " + c.str());
    MultiPoly r;
    r.vars_ = vars_;
    std::vector<int> ne(e.size());
    for (size_t i = 0; i < e.size(); ++i) ne[i] = e[i] * k;
    r.terms_[ne] = (c == -1 && (k % 2 != 0)) ? Int(-1) : Int(1);
    r.normalize();
    return r;
  }
  MultiPoly base = *this;
  MultiPoly acc(1);
  while (k > 0) {
    if (k & 1) acc *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return acc;
}

MultiPoly MultiPoly::substitute(
    const std::map<std::string, MultiPoly>& bind) const {
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    std::vector<std::pair<std::string, int>> keep;
    MultiPoly factor(1);
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = bind.find(vars_[i]);
      if (it == bind.end()) {
        keep.emplace_back(vars_[i], e[i]);
      } else {
        if (e[i] < 0 && (it->second.terms_.size() != 1))
          throw SubstitutionNotLaurent(
              "substituting a non-monomial into a negative power of " +
              vars_[i]);
        factor *= it->second.pow(e[i]);
      }
    }
    out += monomial(c, keep) * factor;
  }
  return out;
}

MultiPoly::Analysis MultiPoly::analyze(const std::string& var) const {
  Analysis a;
  if (terms_.empty()) {
    a.empty = true;
    return a;
  }
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return a;  // degree 0 throughout
  size_t idx = it - vars_.begin();
  a.min_deg = INT_MAX;
  a.max_deg = INT_MIN;
  for (const auto& [e, c] : terms_) {
    a.min_deg = std::min(a.min_deg, e[idx]);
    a.max_deg = std::max(a.max_deg, e[idx]);
  }
  a.span = a.max_deg - a.min_deg;
  return a;
}

MultiPoly MultiPoly::slice(const std::string& var, int k) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var)
    return k == 0 ? *this : MultiPoly();
  size_t idx = it - vars_.begin();
  MultiPoly r;
  r.vars_ = vars_;
  r.vars_.erase(r.vars_.begin() + idx);
  for (const auto& [e, c] : terms_) {
    if (e[idx] != k) continue;
    std::vector<int> ne = e;
    ne.erase(ne.begin() + idx);
    r.terms_[ne] += c;
  }
  r.normalize();
  return r;
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return MultiPoly();
  size_t idx = it - vars_.begin();
  MultiPoly r;
  r.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    std::vector<int> ne = e;
    ne[idx] -= 1;
    r.terms_[ne] += c * e[idx];
  }
  r.normalize();
  return r;
}

Int MultiPoly::coeff(const std::map<std::string, int>& pows) const {
  for (const auto& [name, e] : pows)
    if (e != 0 &&
        !std::binary_search(vars_.begin(), vars_.end(), name))
      return 0;
  std::vector<int> key(vars_.size(), 0);
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = pows.find(vars_[i]);
    if (it != pows.end()) key[i] = it->second;
  }
  auto it = terms_.find(key);
  return it == terms_.end() ? Int(0) : it->second;
}

Int MultiPoly::eval(const std::map<std::string, Int>& at) const {
  Int total = 0;
  for (const auto& [e, c] : terms_) {
    Int prod = c;
    for (size_t i = 0; i < vars_.size(); ++i) {
      auto it = at.find(vars_[i]);
      if (it == at.end())
        throw SubstitutionNotLaurent("eval: unbound variable " + vars_[i]);
      const Int& v = it->second;
      int k = e[i];
      if (k < 0) {
        if (v != 1 && v != -1)
          throw SubstitutionNotLaurent(
              "eval: negative exponent at non-unit value for " + vars_[i]);
        prod *= (v == -1 && (-k) % 2 == 1) ? Int(-1) : Int(1);
      } else {
        for (int j = 0; j < k; ++j) prod *= v;
      }
    }
    total += prod;
  }
  return total;
}

namespace {

std::string factor_string(const std::string& name, int e) {
  if (name == "t4") {
    int g = std::gcd(std::abs(e), 4);
    int num = e / g, den = 4 / g;
    if (den == 1) {
      if (num == 1) return "t";
      return "t^" + std::to_string(num);
    }
    return "t^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
  }
  if (e == 1) return name;
  return name + "^" + std::to_string(e);
}

}  // namespace

std::string MultiPoly::render() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Int ac = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::vector<std::string> parts;
    bool any_var = false;
    for (size_t i = 0; i < vars_.size(); ++i)
      if (e[i] != 0) any_var = true;
    if (ac != 1 || !any_var) parts.push_back(ac.str());
    for (size_t i = 0; i < vars_.size(); ++i)
      if (e[i] != 0) parts.push_back(factor_string(vars_[i], e[i]));
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) out += "*";
      out += parts[i];
    }
  }
  return out;
}

std::string MultiPoly::to_json_string() const {
  nlohmann::ordered_json j;
  j["vars"] = vars_;
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [e, c] : terms_) {
    nlohmann::ordered_json t;
    t["e"] = e;
    if (c >= Int(LLONG_MIN) && c <= Int(LLONG_MAX))
      t["c"] = c.convert_to<long long>();
    else
      t["c"] = c.str();
    j["terms"].push_back(std::move(t));
  }
  return j.dump();
}

MultiPoly MultiPoly::from_json_string(const std::string& s) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(s);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("poly json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
    throw ParseError("poly json needs vars and terms");
  std::vector<std::string> vars;
  for (const auto& v : j["vars"]) vars.push_back(v.get<std::string>());
  std::vector<std::pair<std::vector<int>, Int>> tl;
  for (const auto& t : j["terms"]) {
    std::vector<int> e;
    for (const auto& x : t.at("e")) e.push_back(x.get<int>());
    Int c;
    if (t.at("c").is_string())
      c = Int(t.at("c").get<std::string>());
    else
      c = Int(t.at("c").get<long long>());
    tl.emplace_back(std::move(e), c);
  }
  return from_parts(std::move(vars), std::move(tl));
}

MultiPoly MultiPoly::from_parts(
    std::vector<std::string> vars,
    std::vector<std::pair<std::vector<int>, Int>> tl) {
  for (size_t i = 1; i < vars.size(); ++i)
    if (!(vars[i - 1] < vars[i]))
      throw ParseError("poly vars must be strictly sorted");
  MultiPoly p;
  p.vars_ = std::move(vars);
  for (auto& [e, c] : tl) {
    if (e.size() != p.vars_.size())
      throw ParseError("poly term exponent arity mismatch");
    p.terms_[e] += c;
  }
  p.normalize();
  return p;
}

}  // namespace gp
