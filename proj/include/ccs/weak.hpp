/// \file weak.hpp
/// \brief EPS closure and weak transitions over a finite LTS.

#ifndef CCS_WEAK_HPP
#define CCS_WEAK_HPP

#include <span>
#include <vector>

#include "ccs/semantics.hpp"

namespace ccs {

class IncompleteLts : public Error {
public:
  IncompleteLts() : Error("operation needs a completely explored LTS") {}
};

/// States reachable from s by zero or more tau edges, ascending.
std::vector<StateId> eps_closure(const Lts& lts, StateId s);

/// An LTS together with its EPS relation and all weak transitions.
///
/// Weak edges follow WEAK_TRANS literally: a visible edge s =a=> t means
/// s eps . -a-> . eps t, and a tau edge means at least one tau step.
/// The zero-or-more relation is kept separately in `eps`.
class SaturatedLts {
public:
  explicit SaturatedLts(Lts base);

  const Lts& base() const { return base_; }
  std::size_t size() const { return base_.size(); }

  const std::vector<StateId>& eps(StateId s) const { return eps_[s]; }
  bool eps_reaches(StateId s, StateId t) const;

  /// Sorted by (source, action, target); action ids are those of base().
  const std::vector<Edge>& weak_edges() const { return weak_; }
  std::span<const Edge> weak_out(StateId s) const;

  /// Targets of s ==u=>>, ascending. Empty for actions the LTS never performs.
  std::vector<StateId> weak_successors(StateId s, const Action& u) const;
  std::vector<StateId> weak_successors(StateId s, ActionId u) const;

private:
  Lts base_;
  std::vector<std::vector<StateId>> eps_;
  std::vector<Edge> weak_;
  std::vector<std::size_t> offsets_;
};

/// Throws IncompleteLts when lts.complete() is false.
SaturatedLts saturate(Lts lts);

}  // namespace ccs

#endif  // CCS_WEAK_HPP
