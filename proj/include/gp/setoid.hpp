#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gp/graph.hpp"
#include "gp/poly.hpp"

namespace gp {

// Pair (E, T): elements with a family of "trees" (arbitrary subsets).
// An isthmus belongs to every tree, a loop to none.
struct Setoid {
  std::set<std::string> elements;
  std::set<std::set<std::string>> trees;

  bool operator==(const Setoid&) const = default;

  void validate() const;  // every tree must stay inside the element set
  std::string to_json_string() const;
  static Setoid from_json_string(const std::string& text);
};

enum class SetoidOp { del, contract, dual };
enum class ElementClass { isthmus, loop, proper };

// del keeps trees avoiding e; contract keeps t with t+{e} in T; dual
// complements the tree family inside 2^E.
Setoid setoid_ops(const Setoid& s, const std::string& e, SetoidOp kind);
ElementClass classify(const Setoid& s, const std::string& e);

// Tutte polynomial along one element order: split on the first proper
// element, leaves are single-tree setoids (x^|t| y^|E-t|) or empty-T (1).
MultiPoly tutte_setoid(const Setoid& s, const std::vector<std::string>& order);

// Smallest permutation-invariant tree family containing T: all subsets
// whose size matches some tree of S.
Setoid symmetrized(const Setoid& s);
MultiPoly chi_sym(const Setoid& s);

// Distinct polynomials over all |E|! orderings with multiplicities,
// sorted by rendered text. TooManyOrderings above the cap.
std::vector<std::pair<MultiPoly, long long>> ordering_census(const Setoid& s,
                                                             int cap = 6);

bool is_E_setoid(const Setoid& s);
Setoid product(const Setoid& a, const Setoid& b);  // (E+E', {t union t'})
Setoid sum(const Setoid& a, const Setoid& b);      // (E+E', T union T')
// No factorization S'*S'' with an edge in each factor (partition search).
bool is_2connected(const Setoid& s, int cap = 10);

// Elements are edge ids (as decimal strings), trees the spanning trees.
// Connected graphs only.
Setoid graph_to_setoid(const DecoratedGraph& g);

// Formal integer combination of graphs keyed by canonical_code (the code
// covers the special-edge decoration).
struct GraphCombination {
  std::map<std::string, std::pair<Int, DecoratedGraph>> terms;

  Int coeff(const std::string& code) const;
  std::map<std::string, Int> coefficients() const;
};

enum class PatternMethod { resolution, counting };

// Expansion of a classical graph in the all-special basis. Both methods
// must agree: resolution applies G(e) = G(e_s) + (G-e) edge by edge,
// counting enumerates edge subsets directly.
GraphCombination pattern_polynomial(const DecoratedGraph& g,
                                    PatternMethod method = PatternMethod::resolution);

// Inverse direction: resolve special edges via e_s = e - (G-e), returning
// an integer combination of classical graphs.
GraphCombination classical_expansion(const DecoratedGraph& g);

enum class SpecializeHom { bracket_prime, traldi, z_dichromatic, matching };

// Ring homomorphisms applied to the pattern expansion; each all-special
// H maps to mu^(p0+p1)(A/B)^|E|, t^p0 z^p1, q^p0 v^|E|, or the matching
// rule (y^n for n disjoint intervals plus isolated vertices, else 0).
MultiPoly specialize(const DecoratedGraph& g, SpecializeHom hom);

// Formal sum of ordered graph pairs keyed by canonical codes.
struct GraphTensor {
  std::map<std::pair<std::string, std::string>, Int> terms;
  std::map<std::string, DecoratedGraph> reps;

  bool same_terms(const GraphTensor& o) const { return terms == o.terms; }
};

// Schmitt coproduct (G - S2) (x) (G - S1) over ordered disjoint subset
// pairs; 3^|E| terms, capped at |E| <= 4.
GraphTensor schmitt_coproduct(const DecoratedGraph& g);

// Checks nabla(phi G) = (phi (x) phi)(nabla' G) in the classical (x)
// classical basis, phi marking every edge special.
bool verify_intertwiner(const DecoratedGraph& g);

}  // namespace gp
