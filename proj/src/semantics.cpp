#include "ccs/semantics.hpp"

#include <algorithm>
#include <deque>

#include "ccs/parser.hpp"

namespace ccs {

namespace {

void normalize(std::vector<Step>& steps) {
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
}

std::vector<Step> successors_in(const Environment& env, const Process& p,
                                std::vector<std::string>& unfolding) {
  std::vector<Step> out;
  switch (p.kind()) {
    case TermKind::Nil:
      break;
    case TermKind::Prefix:
      out.push_back({p.action(), p.body()});
      break;
    case TermKind::Sum: {
      out = successors_in(env, p.left(), unfolding);
      auto right = successors_in(env, p.right(), unfolding);
      out.insert(out.end(), right.begin(), right.end());
      break;
    }
    case TermKind::Par: {
      auto left = successors_in(env, p.left(), unfolding);
      auto right = successors_in(env, p.right(), unfolding);
      for (const auto& s : left) {
        out.push_back({s.action, Process::par(s.target, p.right())});
      }
      for (const auto& s : right) {
        out.push_back({s.action, Process::par(p.left(), s.target)});
      }
      for (const auto& l : left) {
        if (l.action.is_tau()) continue;
        Label partner = complement(l.action.label());
        for (const auto& r : right) {
          if (!r.action.is_tau() && r.action.label() == partner) {
            out.push_back({Action::tau(), Process::par(l.target, r.target)});
          }
        }
      }
      break;
    }
    case TermKind::Restr:
      for (auto& s : successors_in(env, p.body(), unfolding)) {
        if (s.action.is_tau() || !p.hidden().contains(s.action.label().base)) {
          out.push_back({std::move(s.action), Process::restr(p.hidden(), std::move(s.target))});
        }
      }
      break;
    case TermKind::Relab:
      for (auto& s : successors_in(env, p.body(), unfolding)) {
        out.push_back({apply_relabeling(p.relabeling(), s.action),
                       Process::relab(std::move(s.target), p.relabeling())});
      }
      break;
    case TermKind::Const: {
      if (std::find(unfolding.begin(), unfolding.end(), p.name()) != unfolding.end()) {
        throw UnguardedRecursion(p.name());
      }
      const Process& body = env.definition(p.name());
      unfolding.push_back(p.name());
      out = successors_in(env, body, unfolding);
      unfolding.pop_back();
      break;
    }
  }
  normalize(out);
  return out;
}

}  // namespace

std::vector<Step> successors(const Environment& env, const Process& p) {
  std::vector<std::string> unfolding;
  return successors_in(env, p, unfolding);
}

bool stable(const Environment& env, const Process& p) {
  for (const auto& s : successors(env, p)) {
    if (s.action.is_tau()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

Lts::Lts(std::vector<Process> states, const std::vector<Transition>& transitions,
         std::vector<StateId> roots, bool complete)
    : states_(std::move(states)), roots_(std::move(roots)), complete_(complete) {
  index_.reserve(states_.size());
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (!index_.emplace(states_[i], static_cast<StateId>(i)).second) {
      throw Error("duplicate LTS state " + print_term(states_[i]));
    }
  }
  for (StateId r : roots_) {
    if (r >= states_.size()) throw Error("LTS root out of range");
  }

  std::vector<Action> visible;
  for (const auto& t : transitions) {
    if (!t.action.is_tau()) visible.push_back(t.action);
  }
  std::sort(visible.begin(), visible.end());
  visible.erase(std::unique(visible.begin(), visible.end()), visible.end());
  actions_.push_back(Action::tau());
  actions_.insert(actions_.end(), visible.begin(), visible.end());

  edges_.reserve(transitions.size());
  for (const auto& t : transitions) {
    auto s = index_of(t.source);
    auto d = index_of(t.target);
    if (!s || !d) throw Error("LTS edge endpoint is not a state");
    edges_.push_back({*s, *action_id(t.action), *d});
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  offsets_.assign(states_.size() + 1, 0);
  for (const auto& e : edges_) ++offsets_[e.source + 1];
  for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
}

std::optional<ActionId> Lts::action_id(const Action& u) const {
  if (u.is_tau()) return tau_id;
  auto it = std::lower_bound(actions_.begin() + 1, actions_.end(), u);
  if (it == actions_.end() || *it != u) return std::nullopt;
  return static_cast<ActionId>(it - actions_.begin());
}

std::span<const Edge> Lts::out(StateId s) const {
  return std::span<const Edge>(edges_).subspan(offsets_[s], offsets_[s + 1] - offsets_[s]);
}

std::optional<StateId> Lts::index_of(const Process& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------

Lts explore(const Environment& env, const std::vector<Process>& roots, const Limits& limits) {
  if (limits.max_states < 1) throw Error("max_states must be at least 1");

  std::vector<Process> states;
  std::unordered_map<Process, StateId, ProcessHash> seen;
  std::vector<std::vector<Step>> moves;  // successors of each expanded state
  std::vector<StateId> root_ids;
  bool complete = true;

  std::size_t nodes = 0;
  auto discover = [&](const Process& p) -> std::optional<StateId> {
    if (auto it = seen.find(p); it != seen.end()) return it->second;
    if (states.size() >= limits.max_states) return std::nullopt;
    nodes += p.size();
    if (nodes > limits.max_nodes) return std::nullopt;
    auto id = static_cast<StateId>(states.size());
    seen.emplace(p, id);
    states.push_back(p);
    return id;
  };

  for (const auto& r : roots) {
    auto id = discover(r);
    if (!id) {
      complete = false;
      break;
    }
    root_ids.push_back(*id);
  }

  std::size_t steps = 0;
  for (std::size_t next = 0; complete && next < states.size(); ++next) {
    std::vector<Step> out;
    try {
      out = successors(env, states[next]);
    } catch (const UnguardedRecursion&) {
      complete = false;
      break;
    }
    steps += out.size();
    if (steps > limits.max_steps) {
      complete = false;
      break;
    }
    for (const auto& s : out) {
      if (!discover(s.target)) {
        complete = false;
        break;
      }
    }
    moves.push_back(std::move(out));
  }

  std::vector<Transition> transitions;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    for (const auto& s : moves[i]) {
      if (seen.contains(s.target)) transitions.push_back({states[i], s.action, s.target});
    }
  }
  return Lts(std::move(states), transitions, std::move(root_ids), complete);
}

Lts explore_complete(const Environment& env, const std::vector<Process>& roots,
                     const Limits& limits) {
  Lts lts = explore(env, roots, limits);
  if (!lts.complete()) {
    throw ExceedsCap("state space exceeds the exploration cap (" +
                     std::to_string(limits.max_states) + " states, " +
                     std::to_string(limits.max_steps) + " steps, " +
                     std::to_string(limits.max_nodes) + " term nodes)");
  }
  return lts;
}

std::optional<std::size_t> finite_state_count(const Environment& env, const Process& p,
                                              std::size_t cap) {
  Limits limits;
  limits.max_states = cap;
  Lts lts = explore(env, {p}, limits);
  if (!lts.complete()) return std::nullopt;
  return lts.size();
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const Lts& lts) {
  std::string out = "digraph lts {\n";
  for (std::size_t i = 0; i < lts.size(); ++i) {
    bool is_root = std::find(lts.roots().begin(), lts.roots().end(), i) != lts.roots().end();
    out += "  s" + std::to_string(i) + " [label=\"" + dot_escape(print_term(lts.state(i))) +
           "\"" + (is_root ? ", shape=doublecircle" : "") + "];\n";
  }
  for (const auto& e : lts.edges()) {
    out += "  s" + std::to_string(e.source) + " -> s" + std::to_string(e.target) +
           " [label=\"" + dot_escape(print_action(lts.action(e.action))) + "\"" +
           (e.action == Lts::tau_id ? ", style=dashed" : "") + "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace ccs
