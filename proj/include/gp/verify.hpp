#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gp/diagram.hpp"
#include "gp/poly.hpp"
#include "gp/skein.hpp"

namespace gp {

// One theorem check on concrete inputs. Both sides are computed and
// rendered; a failing report carries a reproduction payload (JSON with
// the inputs) that re-fails in isolation via rerun_from_repro.
struct CheckReport {
  std::string check_id;
  std::string digest;   // stable hash of the inputs
  std::string lhs;
  std::string rhs;
  std::string verdict;  // "pass" | "fail" | "not_applicable"
  std::string detail;   // what was compared, or why it does not apply
  std::string repro;    // JSON payload, only on fail
  double elapsed_ms = 0.0;

  bool passed() const { return verdict == "pass"; }
  bool failed() const { return verdict == "fail"; }
  std::string line() const;
  std::string to_json_string() const;
};

// Bracket span 4n, the extreme-term exponents and unit coefficients with
// their signs, and the adequate-span formula, for connected alternating
// diagrams without nugatory crossings; not_applicable otherwise.
CheckReport check_tait1(const Diagram& d, const SkeinOptions& opt = {});

// Jones coefficient signs alternate (zeros allowed) on connected
// alternating diagrams; reduced prime diagrams whose checkerboard graph
// is not a polygon additionally get no interior zeros and unit extreme
// coefficients.
CheckReport check_alternating_jones(const Diagram& d, const SkeinOptions& opt = {});

// The smoothing of the named crossing that eliminates a clasp.
struct ClaspSite {
  int crossing_id = 0;
  int marker = 1;
};

// deg Q <= n - b always; positive x^(n-1) coefficient for connected
// prime alternating diagrams; with a clasp site, equal leading
// coefficients before and after the clasp elimination.
CheckReport check_kidwell(const Diagram& d,
                          std::optional<ClaspSite> clasp = std::nullopt,
                          const SkeinOptions& opt = {});

// Exterior slices of the Kauffman polynomial against checkerboard Tutte
// products: phi+ = chi_{G_b}(0,t) chi_{Gbar_w}(t,0) and the mirror pair;
// connected diagrams with at least one crossing.
CheckReport check_phi_tutte(const Diagram& d, const SkeinOptions& opt = {});

// -w-(s-1) <= e <= E <= -w+(s-1), M <= n-(s-1), and min z-degree 1-mu;
// reports the braid-index lower bound (E-e)/2+1. The flag adds the
// amphicheiral-only bound |w| < s.
CheckReport check_mfw(const Diagram& d, bool amphicheiral_claimed = false,
                      const SkeinOptions& opt = {});

// Corner term a^(-w+s-1) z^(n-s+1) present iff every crossing is
// positive (mirror statement for negative); positive diagrams also get
// M = -E = n-(s-1), +-adequacy and s = |s+|; the orientation state never
// touches itself.
CheckReport check_positivity(const Diagram& d, const SkeinOptions& opt = {});

// Scrutiny of a claimed isotopy (never trusted): F values must agree,
// and when they do, Tait numbers must respect the adequacy ordering
// Tait(D1)-Tait(D2) >= n(D1)-n(D2) for +-adequate D1 (mirrored for -);
// reports the monomial relating the two Kauffman lambdas.
CheckReport check_adequate_rigidity(const Diagram& d1, const Diagram& d2,
                                    const SkeinOptions& opt = {});

// Simplified tree-like diagrams: M = n-(s-1) and the z^M coefficient is
// the bare monomial a^(-w+d(+)-d(-)).
CheckReport check_tree_like(const Diagram& d, const SkeinOptions& opt = {});

// Self-generating graph corpus (all connected multigraphs <= 6 edges
// plus K4 and embedded fixtures): Tutte coefficient structure, spanning
// tree lower bounds with their equality cases, plane duality, and the K4
// boundary values.
std::vector<CheckReport> check_graph_corpus();

// Ids of the single-diagram checks, in canonical order.
std::vector<std::string> check_ids();

// Runs the named checks over every input concurrently and merges the
// reports deterministically by (check_id, digest, input order).
std::vector<CheckReport> run_checks(const std::vector<std::string>& ids,
                                    const std::vector<Diagram>& inputs,
                                    const SkeinOptions& opt = {});

// Rebuilds the inputs of a failing report's payload and runs its check
// again; the result must fail the same way in isolation.
CheckReport rerun_from_repro(const std::string& repro_json);

// Alternating diagrams D(G) over random 2-connected loopless plane
// multigraphs with all-b edges; each has between 2 and max_crossings
// crossings.
std::vector<Diagram> alternating_corpus(unsigned seed, int count,
                                        int max_crossings);

}  // namespace gp
