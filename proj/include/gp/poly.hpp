#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gp/errors.hpp"

namespace gp {

using Int = boost::multiprecision::cpp_int;

// Canonical order on exponent vectors (same length): componentwise
// |e| descending, positive before negative on ties, lexicographic over
// the (alphabetical) variable list. 'x' precedes 'x^-1' precedes '1'.
struct TermOrder {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Sparse multivariate Laurent polynomial with exact integer coefficients.
// The variable universe is kept sorted and pruned: a variable survives only
// while some term uses it with a nonzero exponent. The special variable
// name "t4" denotes t^(1/4) and renders as a quarter power of t.
class MultiPoly {
public:
  using Terms = std::map<std::vector<int>, Int, TermOrder>;

  MultiPoly() = default;
  explicit MultiPoly(const Int& c);
  MultiPoly(long long c);

  static MultiPoly var(const std::string& name, int exp = 1);
  static MultiPoly monomial(
      const Int& c, const std::vector<std::pair<std::string, int>>& pows);

  bool is_zero() const { return terms_.empty(); }
  bool operator==(const MultiPoly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly pow(int k) const;  // k < 0 needs an invertible monomial base

  // Substitutes bindings simultaneously; unbound variables persist.
  // A negative exponent requires its binding to be a monomial with
  // coefficient +-1, else SubstitutionNotLaurent.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& bind) const;

  struct Analysis {
    bool empty = false;  // zero polynomial: degrees undefined, span 0
    int min_deg = 0;
    int max_deg = 0;
    int span = 0;
  };
  Analysis analyze(const std::string& var) const;
  // Coefficient of var^k as a polynomial in the remaining variables.
  MultiPoly slice(const std::string& var, int k) const;
  MultiPoly derivative(const std::string& var) const;

  std::string render() const;

  // {"vars":[...],"terms":[{"e":[...],"c":...}]}; coefficients that do not
  // fit in 64 bits are emitted as decimal strings.
  std::string to_json_string() const;
  static MultiPoly from_json_string(const std::string& s);

  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  // Coefficient of the given monomial (exponents for absent vars must be 0).
  Int coeff(const std::map<std::string, int>& pows) const;
  // Total evaluation; all variables must be bound. Negative exponents
  // require the bound value to be +-1.
  Int eval(const std::map<std::string, Int>& at) const;

  static MultiPoly from_parts(std::vector<std::string> vars,
                              std::vector<std::pair<std::vector<int>, Int>> tl);

private:
  std::vector<std::string> vars_;
  Terms terms_;

  void normalize();
  MultiPoly aligned_to(const std::vector<std::string>& universe) const;
  friend MultiPoly merge_add(const MultiPoly& a, const MultiPoly& b, int sgn);
};

}  // namespace gp
