/// \file semantics.hpp
/// \brief SOS transition relation and bounded state-space exploration.

#ifndef CCS_SEMANTICS_HPP
#define CCS_SEMANTICS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ccs/syntax.hpp"

namespace ccs {

/// One outgoing move of a term.
struct Step {
  Action action;
  Process target;
  auto operator<=>(const Step&) const = default;
};

struct Transition {
  Process source;
  Action action;
  Process target;
};

/// Single-step successors, sorted and duplicate-free.
/// Throws UnboundConstant, or UnguardedRecursion when a constant is
/// unfolded again while computing the same successor set.
std::vector<Step> successors(const Environment& env, const Process& p);

/// True iff p has no tau move from its root.
bool stable(const Environment& env, const Process& p);

struct Limits {
  std::size_t max_states = 10000;
  std::size_t max_steps = 1000000;
  /// Total syntax-tree size of all discovered states. Bounds memory when
  /// states grow deeper without repeating, e.g. A = a.(A | 0).
  std::size_t max_nodes = 4000000;
};

using StateId = std::uint32_t;
using ActionId = std::uint32_t;

struct Edge {
  StateId source;
  ActionId action;
  StateId target;
  auto operator<=>(const Edge&) const = default;
};

/// A finite labelled transition system over process terms.
///
/// States are pairwise structurally distinct. Edges are sorted by
/// (source, action, target) and action ids index `actions()`, which holds
/// tau at id 0 followed by the visible actions in sorted order.
class Lts {
public:
  Lts(std::vector<Process> states, const std::vector<Transition>& transitions,
      std::vector<StateId> roots, bool complete);

  std::size_t size() const { return states_.size(); }
  const Process& state(StateId s) const { return states_[s]; }
  const std::vector<Process>& states() const { return states_; }
  const std::vector<StateId>& roots() const { return roots_; }
  bool complete() const { return complete_; }

  const std::vector<Action>& actions() const { return actions_; }
  const Action& action(ActionId a) const { return actions_[a]; }
  static constexpr ActionId tau_id = 0;
  std::optional<ActionId> action_id(const Action& u) const;

  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Edge> out(StateId s) const;

  std::optional<StateId> index_of(const Process& p) const;

private:
  std::vector<Process> states_;
  std::vector<Action> actions_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;  // edges of s are [offsets_[s], offsets_[s+1])
  std::vector<StateId> roots_;
  bool complete_;
  std::unordered_map<Process, StateId, ProcessHash> index_;
};

/// Breadth-first exploration from the roots. Hitting either cap, or
/// unguarded recursion, yields complete() == false instead of an error.
/// Roots are deduplicated; `roots()` lists one state id per given root.
Lts explore(const Environment& env, const std::vector<Process>& roots, const Limits& limits = {});

/// Like explore, but throws ExceedsCap when the result would be incomplete.
Lts explore_complete(const Environment& env, const std::vector<Process>& roots,
                     const Limits& limits = {});

/// Number of reachable states if exploration completes within `cap` states.
std::optional<std::size_t> finite_state_count(const Environment& env, const Process& p,
                                              std::size_t cap);

/// Graphviz rendering; tau edges are dashed. States keep BFS order.
std::string to_dot(const Lts& lts);

}  // namespace ccs

#endif  // CCS_SEMANTICS_HPP
