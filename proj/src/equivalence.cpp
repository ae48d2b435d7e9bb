#include "ccs/equivalence.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ccs {

std::string relation_name(Relation r) {
  switch (r) {
    case Relation::Strong: return "strong";
    case Relation::Weak: return "weak";
    case Relation::ObsCongr: return "obscongr";
  }
  return "strong";
}

Relation parse_relation(std::string_view name) {
  if (name == "strong") return Relation::Strong;
  if (name == "weak") return Relation::Weak;
  if (name == "obscongr") return Relation::ObsCongr;
  throw Error("unknown relation '" + std::string(name) + "' (expected strong, weak or obscongr)");
}

namespace {

using Signature = std::vector<std::pair<ActionId, std::uint32_t>>;

// Signature refinement to a fixpoint. Each round renumbers classes in
// order of their smallest member, so the result does not depend on
// hash or map iteration order.
template <typename SigFn>
Partition refine(std::size_t n, SigFn&& signature) {
  std::vector<std::uint32_t> class_of(n, 0);
  std::size_t count = n == 0 ? 0 : 1;
  for (;;) {
    std::map<std::pair<std::uint32_t, Signature>, std::uint32_t> ids;
    std::vector<std::uint32_t> next(n);
    for (StateId s = 0; s < n; ++s) {
      Signature sig = signature(s, class_of);
      std::sort(sig.begin(), sig.end());
      sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
      auto [it, fresh] = ids.try_emplace({class_of[s], std::move(sig)},
                                         static_cast<std::uint32_t>(ids.size()));
      next[s] = it->second;
    }
    class_of = std::move(next);
    if (ids.size() == count) break;
    count = ids.size();
  }
  Partition out;
  out.classes.resize(count);
  for (StateId s = 0; s < n; ++s) out.classes[class_of[s]].push_back(s);
  out.class_of = std::move(class_of);
  return out;
}

}  // namespace

Partition strong_bisim_partition(const Lts& lts) {
  if (!lts.complete()) throw IncompleteLts();
  return refine(lts.size(), [&](StateId s, const std::vector<std::uint32_t>& cls) {
    Signature sig;
    for (const Edge& e : lts.out(s)) sig.emplace_back(e.action, cls[e.target]);
    return sig;
  });
}

Partition weak_bisim_partition(const SaturatedLts& sat) {
  return refine(sat.size(), [&](StateId s, const std::vector<std::uint32_t>& cls) {
    Signature sig;
    for (StateId t : sat.eps(s)) sig.emplace_back(Lts::tau_id, cls[t]);
    for (const Edge& e : sat.weak_out(s)) {
      if (e.action != Lts::tau_id) sig.emplace_back(e.action, cls[e.target]);
    }
    return sig;
  });
}

namespace {

// States that answer a strong u-challenge in the weak game: EPS for tau,
// WEAK_TRANS for visible actions.
std::vector<StateId> weak_answers(const SaturatedLts& sat, StateId s, ActionId u) {
  return u == Lts::tau_id ? sat.eps(s) : sat.weak_successors(s, u);
}

}  // namespace

bool is_weak_bisimulation(const SaturatedLts& sat,
                          const std::vector<std::pair<StateId, StateId>>& rel) {
  std::set<std::pair<StateId, StateId>> in(rel.begin(), rel.end());
  for (const auto& [p, q] : in) {
    if (p >= sat.size() || q >= sat.size()) throw Error("relation pair out of range");
    for (const Edge& e : sat.base().out(p)) {
      auto answers = weak_answers(sat, q, e.action);
      if (std::none_of(answers.begin(), answers.end(),
                       [&](StateId q2) { return in.contains({e.target, q2}); })) {
        return false;
      }
    }
    for (const Edge& e : sat.base().out(q)) {
      auto answers = weak_answers(sat, p, e.action);
      if (std::none_of(answers.begin(), answers.end(),
                       [&](StateId p2) { return in.contains({p2, e.target}); })) {
        return false;
      }
    }
  }
  return true;
}

namespace {

enum class Game { Strong, Weak, Rooted };

std::vector<StateId> answers(Game g, const Lts& lts, const SaturatedLts* sat, StateId s,
                             ActionId u) {
  switch (g) {
    case Game::Strong: {
      std::vector<StateId> out;
      for (const Edge& e : lts.out(s)) {
        if (e.action == u) out.push_back(e.target);
      }
      return out;
    }
    case Game::Weak: return weak_answers(*sat, s, u);
    case Game::Rooted: return sat->weak_successors(s, u);
  }
  return {};
}

// First root challenge of one side that the other cannot answer into the
// challenger's class. Left side first, then edges in LTS order.
std::optional<Witness> find_witness(Game g, const Lts& lts, const SaturatedLts* sat,
                                    const Partition& part, StateId p, StateId q) {
  for (Side side : {Side::Left, Side::Right}) {
    StateId from = side == Side::Left ? p : q;
    StateId other = side == Side::Left ? q : p;
    for (const Edge& e : lts.out(from)) {
      auto resp = answers(g, lts, sat, other, e.action);
      bool matched = std::any_of(resp.begin(), resp.end(),
                                 [&](StateId t) { return part.same(t, e.target); });
      if (!matched) {
        return Witness{side, lts.state(from), lts.action(e.action), lts.state(e.target)};
      }
    }
  }
  return std::nullopt;
}

Verdict equivalence_verdict(Relation kind, Game g, const Lts& lts, const SaturatedLts* sat,
                            const Partition& part, StateId p, StateId q) {
  Verdict v;
  v.kind = kind;
  v.states = lts.size();
  v.classes = part.classes.size();
  v.related = part.same(p, q);
  if (!v.related) {
    v.witness = find_witness(g, lts, sat, part, p, q);
    if (!v.witness) throw std::logic_error("unrelated states without a distinguishing move");
  }
  return v;
}

}  // namespace

Verdict strong_equiv(const Lts& lts, const Partition& strong, StateId p, StateId q) {
  return equivalence_verdict(Relation::Strong, Game::Strong, lts, nullptr, strong, p, q);
}

Verdict weak_equiv(const SaturatedLts& sat, const Partition& weak, StateId p, StateId q) {
  return equivalence_verdict(Relation::Weak, Game::Weak, sat.base(), &sat, weak, p, q);
}

Verdict obs_congr(const SaturatedLts& sat, const Partition& weak, StateId p, StateId q) {
  Verdict v;
  v.kind = Relation::ObsCongr;
  v.states = sat.size();
  v.classes = weak.classes.size();
  v.witness = find_witness(Game::Rooted, sat.base(), &sat, weak, p, q);
  v.related = !v.witness.has_value();
  return v;
}

namespace {

Lts two_rooted(const Environment& env, const Process& p, const Process& q, const Limits& limits) {
  return explore_complete(env, {p, q}, limits);
}

}  // namespace

Verdict strong_equiv(const Environment& env, const Process& p, const Process& q,
                     const Limits& limits) {
  Lts lts = two_rooted(env, p, q, limits);
  Partition part = strong_bisim_partition(lts);
  return strong_equiv(lts, part, lts.roots()[0], lts.roots()[1]);
}

Verdict weak_equiv(const Environment& env, const Process& p, const Process& q,
                   const Limits& limits) {
  SaturatedLts sat = saturate(two_rooted(env, p, q, limits));
  Partition part = weak_bisim_partition(sat);
  return weak_equiv(sat, part, sat.base().roots()[0], sat.base().roots()[1]);
}

Verdict obs_congr(const Environment& env, const Process& p, const Process& q,
                  const Limits& limits) {
  SaturatedLts sat = saturate(two_rooted(env, p, q, limits));
  Partition part = weak_bisim_partition(sat);
  return obs_congr(sat, part, sat.base().roots()[0], sat.base().roots()[1]);
}

Verdict check_relation(Relation kind, const Environment& env, const Process& p, const Process& q,
                       const Limits& limits) {
  switch (kind) {
    case Relation::Strong: return strong_equiv(env, p, q, limits);
    case Relation::Weak: return weak_equiv(env, p, q, limits);
    case Relation::ObsCongr: return obs_congr(env, p, q, limits);
  }
  return strong_equiv(env, p, q, limits);
}

}  // namespace ccs
