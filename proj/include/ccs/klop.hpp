/// \file klop.hpp
/// \brief Klop processes and the finite-state coarsest-congruence decision.

#ifndef CCS_KLOP_HPP
#define CCS_KLOP_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ccs/equivalence.hpp"

namespace ccs {

/// Largest index klop() will build; the term has 2^(n+1) - 1 nodes.
inline constexpr std::size_t klop_max_index = 12;

/// klop(a, 0) = 0 and klop(a, n+1) = klop(a, n) + a.klop(a, n).
/// Throws Error when n > klop_max_index.
Process klop(const LabelId& a, std::size_t n);

/// First alphabet label a (declaration order) such that p has no weak
/// a-transition from its root.
std::optional<LabelId> free_action(const Environment& env, const Process& p,
                                   const Limits& limits = {});

struct KlopWitness {
  LabelId action;
  std::size_t index;
  Process term;                 // klop(action, index)
  std::size_t excluded_nodes;   // |NODES(p) u NODES(q)|
};

/// Smallest n <= |NODES(p) u NODES(q)| such that klop(a, n) is weakly
/// equivalent to no state reachable from p or q. Throws ExceedsCap when
/// the state spaces are not finite under `limits` or the search would
/// pass klop_max_index.
KlopWitness klop_witness(const Environment& env, const Process& p, const Process& q,
                         const LabelId& a, const Limits& limits = {});

struct CoarsestDecision {
  bool related = false;  // the decision for p, q observation congruent
  KlopWitness witness;
  Process lhs;      // p + a.k
  Process rhs;      // q + a.k
  Verdict verdict;  // weak equivalence of lhs and rhs
};

/// Decides observation congruence as weak equivalence of p + a.k and
/// q + a.k, with a the first alphabet label and k its Klop witness.
/// Throws Error on an empty alphabet.
CoarsestDecision coarsest_congr_decide(const Environment& env, const Process& p,
                                       const Process& q, const Limits& limits = {});

struct CrosscheckReport {
  bool obs_congr = false;
  bool decide = false;
  std::size_t samples = 0;
  std::vector<Process> failing;  // sampled r with p + r, q + r not weakly equivalent
  std::vector<std::string> problems;

  bool consistent() const { return problems.empty(); }
};

/// Compares coarsest_congr_decide with obs_congr, and checks sampled
/// r terms (depth <= 3 over the alphabet) against both directions of the
/// theorem: congruent pairs survive every r, and a failing r refutes
/// congruence.
CrosscheckReport coarsest_congr_crosscheck(const Environment& env, const Process& p,
                                           const Process& q, std::size_t samples,
                                           std::uint64_t seed, const Limits& limits = {});

}  // namespace ccs

#endif  // CCS_KLOP_HPP
