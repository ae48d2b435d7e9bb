/// \file equivalence.hpp
/// \brief Strong bisimilarity, weak bisimilarity and observation congruence.

#ifndef CCS_EQUIVALENCE_HPP
#define CCS_EQUIVALENCE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccs/weak.hpp"

namespace ccs {

struct Partition {
  std::vector<std::uint32_t> class_of;        // indexed by state
  std::vector<std::vector<StateId>> classes;  // ascending members

  bool same(StateId s, StateId t) const { return class_of[s] == class_of[t]; }
};

enum class Relation { Strong, Weak, ObsCongr };

/// "strong", "weak" or "obscongr".
std::string relation_name(Relation r);
/// Inverse of relation_name; throws Error on anything else.
Relation parse_relation(std::string_view name);

enum class Side { Left, Right };

/// A root move of one side that the other side cannot answer.
struct Witness {
  Side side;
  Process state;   // the challenging root
  Action action;
  Process target;  // where the unanswered move leads
};

struct Verdict {
  bool related = false;
  Relation kind = Relation::Strong;
  std::optional<Witness> witness;  // present whenever related is false
  std::size_t states = 0;
  std::size_t classes = 0;
};

/// Coarsest partition stable under strong steps. Classes are numbered
/// by their smallest member. Throws IncompleteLts.
Partition strong_bisim_partition(const Lts& lts);

/// Weak bisimilarity classes (the largest relation satisfying the weak
/// bisimulation clauses), numbered by their smallest member.
Partition weak_bisim_partition(const SaturatedLts& sat);

/// Checks the four transfer clauses of weak bisimulation for `rel`
/// literally: strong challenges, weak answers, tau answered by EPS.
bool is_weak_bisimulation(const SaturatedLts& sat,
                          const std::vector<std::pair<StateId, StateId>>& rel);

/// \brief Decision procedures on closed terms.
///
/// Each explores the LTS rooted at p and q together and throws
/// ExceedsCap if that exploration does not complete within `limits`.
Verdict strong_equiv(const Environment& env, const Process& p, const Process& q,
                     const Limits& limits = {});
Verdict weak_equiv(const Environment& env, const Process& p, const Process& q,
                   const Limits& limits = {});
Verdict obs_congr(const Environment& env, const Process& p, const Process& q,
                  const Limits& limits = {});
Verdict check_relation(Relation kind, const Environment& env, const Process& p, const Process& q,
                       const Limits& limits = {});

/// Variants over an already saturated LTS, for callers that ask many
/// questions about the same state space.
Verdict strong_equiv(const Lts& lts, const Partition& strong, StateId p, StateId q);
Verdict weak_equiv(const SaturatedLts& sat, const Partition& weak, StateId p, StateId q);
Verdict obs_congr(const SaturatedLts& sat, const Partition& weak, StateId p, StateId q);

}  // namespace ccs

#endif  // CCS_EQUIVALENCE_HPP
