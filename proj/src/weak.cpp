#include "ccs/weak.hpp"

#include <algorithm>

namespace ccs {

namespace {

std::vector<StateId> tau_closure(const Lts& lts, StateId s) {
  std::vector<char> seen(lts.size(), 0);
  std::vector<StateId> stack{s}, out;
  seen[s] = 1;
  while (!stack.empty()) {
    StateId x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (const Edge& e : lts.out(x)) {
      if (e.action != Lts::tau_id) break;  // tau edges sort first
      if (!seen[e.target]) {
        seen[e.target] = 1;
        stack.push_back(e.target);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<StateId> eps_closure(const Lts& lts, StateId s) {
  if (!lts.complete()) throw IncompleteLts();
  if (s >= lts.size()) throw Error("state index out of range");
  return tau_closure(lts, s);
}

SaturatedLts::SaturatedLts(Lts base) : base_(std::move(base)) {
  if (!base_.complete()) throw IncompleteLts();
  const std::size_t n = base_.size();
  eps_.reserve(n);
  for (StateId s = 0; s < n; ++s) eps_.push_back(tau_closure(base_, s));

  // stamp[t] == tag marks t as already emitted for the current (s, u).
  std::vector<std::size_t> stamp(n, 0);
  std::size_t tag = 0;
  const std::size_t actions = base_.actions().size();
  for (StateId s = 0; s < n; ++s) {
    for (ActionId u = 0; u < actions; ++u) {
      ++tag;
      std::size_t first = weak_.size();
      for (StateId mid : eps_[s]) {
        for (const Edge& e : base_.out(mid)) {
          if (e.action != u) continue;
          for (StateId t : eps_[e.target]) {
            if (stamp[t] != tag) {
              stamp[t] = tag;
              weak_.push_back({s, u, t});
            }
          }
        }
      }
      std::sort(weak_.begin() + static_cast<std::ptrdiff_t>(first), weak_.end());
    }
  }
  offsets_.assign(n + 1, 0);
  for (const Edge& e : weak_) ++offsets_[e.source + 1];
  for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
}

bool SaturatedLts::eps_reaches(StateId s, StateId t) const {
  return std::binary_search(eps_[s].begin(), eps_[s].end(), t);
}

std::span<const Edge> SaturatedLts::weak_out(StateId s) const {
  return std::span<const Edge>(weak_).subspan(offsets_[s], offsets_[s + 1] - offsets_[s]);
}

std::vector<StateId> SaturatedLts::weak_successors(StateId s, ActionId u) const {
  std::vector<StateId> out;
  for (const Edge& e : weak_out(s)) {
    if (e.action == u) out.push_back(e.target);
  }
  return out;
}

std::vector<StateId> SaturatedLts::weak_successors(StateId s, const Action& u) const {
  auto id = base_.action_id(u);
  if (!id) return {};
  return weak_successors(s, *id);
}

SaturatedLts saturate(Lts lts) { return SaturatedLts(std::move(lts)); }

}  // namespace ccs
