#pragma once

#include "gp/diagram.hpp"
#include "gp/poly.hpp"

namespace gp {

// Pivot selection for the switch/smooth recursions: walking the strands
// from the least arc of each component (components by least arc), a
// crossing first met as an under-pass is bad; the pivot is the first or
// the last such crossing.
enum class PivotPolicy { first_bad, last_bad };

struct SkeinOptions {
  int state_sum_cap = 22;   // max crossings for 2^n state sums
  int recursion_cap = 14;   // max crossings for 3-way skein recursions
  bool memo = true;         // cache subtrees by a relabeled PD key
  PivotPolicy policy = PivotPolicy::first_bad;
};

// Kauffman bracket in A by the full state sum; crossing-free circles
// multiply by -A^2-A^-2 past the first.
MultiPoly bracket(const Diagram& d, const SkeinOptions& opt = {});

// f_hat = (-A^3)^{-sw} <D>, f = (-A^3)^{-writhe} <D>, jones = f under
// A^k -> t4^{-k} (t4 = t^{1/4}).
struct NormalizedBracket {
  MultiPoly f_hat;
  MultiPoly f;
  MultiPoly jones;
};
NormalizedBracket normalized(const Diagram& d, const SkeinOptions& opt = {});

// Two-variable bracket in A, B: <D> = sum a_i A^i turns into
// sum a_i A^{(n+i)/2} B^{(n-i)/2}.
MultiPoly generalized_bracket(const Diagram& d, const SkeinOptions& opt = {});

// Absolute invariant in x with Q+ + Q- = x(Q0 + Qoo) and trivial
// k-component value ((2-x)/x)^{k-1}.
MultiPoly q_blmho(const Diagram& d, const SkeinOptions& opt = {});

// Regular-isotopy polynomial in a, x with the same 3-way relation and
// descending leaves a^{writhe} ((a+a^{-1})/x - 1)^{c-1}. F is the
// writhe-normalized a^{-Tait} lambda; it needs an orientation and is
// left zero for unoriented input.
struct KauffmanPair {
  MultiPoly lambda;
  MultiPoly F;
};
KauffmanPair kauffman(const Diagram& d, const SkeinOptions& opt = {});

// a P+ + a^{-1} P- = z P0, descending leaves ((a+a^{-1})/z)^{mu-1};
// P_hat = a^{Tait} P.
struct HomflyPair {
  MultiPoly P;
  MultiPoly P_hat;
};
HomflyPair homfly(const Diagram& d, const SkeinOptions& opt = {});

// Integer Conway form: nabla+ - nabla- = z nabla0, unknot 1, split 0.
MultiPoly conway(const Diagram& d, const SkeinOptions& opt = {});

// Extreme-coefficient slices: phi+/phi- collect lambda terms with
// r+s = n resp. s-r = n as polynomials in t; psi+/psi- collect P_hat
// terms with i+j = n resp. j-i = n as polynomials in a. The last field
// is lambda evaluated at x = a+a^{-1} (an exact Laurent value).
struct ExteriorReport {
  MultiPoly phi_plus;
  MultiPoly phi_minus;
  MultiPoly psi_plus;
  MultiPoly psi_minus;
  MultiPoly lambda_at_x_eq_a_plus_ainv;
};
ExteriorReport exterior(const Diagram& d, const SkeinOptions& opt = {});

}  // namespace gp
