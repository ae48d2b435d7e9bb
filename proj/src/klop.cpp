#include "ccs/klop.hpp"

#include <algorithm>

#include "ccs/generator.hpp"
#include "ccs/parser.hpp"

namespace ccs {

Process klop(const LabelId& a, std::size_t n) {
  if (n > klop_max_index) {
    throw Error("Klop index " + std::to_string(n) + " exceeds the limit of " +
                std::to_string(klop_max_index));
  }
  Process k = Process::nil();
  for (std::size_t i = 0; i < n; ++i) k = Process::sum(k, Process::prefix(Action::name(a.str()), k));
  return k;
}

std::optional<LabelId> free_action(const Environment& env, const Process& p,
                                   const Limits& limits) {
  SaturatedLts sat = saturate(explore_complete(env, {p}, limits));
  const StateId root = sat.base().roots()[0];
  for (const LabelId& a : env.alphabet()) {
    if (sat.weak_successors(root, Action::name(a.str())).empty()) return a;
  }
  return std::nullopt;
}

KlopWitness klop_witness(const Environment& env, const Process& p, const Process& q,
                         const LabelId& a, const Limits& limits) {
  const Lts nodes = explore_complete(env, {p, q}, limits);
  const std::size_t n_nodes = nodes.size();
  std::vector<Process> roots = nodes.states();
  roots.emplace_back();  // slot for the candidate

  for (std::size_t n = 0; n <= n_nodes; ++n) {
    if (n > klop_max_index) {
      throw ExceedsCap("Klop witness search passed index " + std::to_string(klop_max_index));
    }
    Process k = klop(a, n);
    roots.back() = k;
    SaturatedLts sat = saturate(explore_complete(env, roots, limits));
    Partition weak = weak_bisim_partition(sat);
    const auto& ids = sat.base().roots();
    const StateId kid = ids.back();
    bool clashes = std::any_of(ids.begin(), ids.end() - 1,
                               [&](StateId s) { return weak.same(s, kid); });
    if (!clashes) return KlopWitness{a, n, std::move(k), n_nodes};
  }
  // Unreachable: klop(a, 0..N) are pairwise inequivalent, so N + 1 of
  // them cannot all land in classes of the N nodes.
  throw std::logic_error("no Klop witness within the node count");
}

CoarsestDecision coarsest_congr_decide(const Environment& env, const Process& p,
                                       const Process& q, const Limits& limits) {
  if (env.alphabet().empty()) throw Error("coarsest-congruence decision needs a non-empty alphabet");
  const LabelId& a = env.alphabet().front();
  KlopWitness w = klop_witness(env, p, q, a, limits);
  Process ak = Process::prefix(Action::name(a.str()), w.term);
  Process lhs = Process::sum(p, ak);
  Process rhs = Process::sum(q, ak);
  Verdict v = weak_equiv(env, lhs, rhs, limits);
  return CoarsestDecision{v.related, std::move(w), std::move(lhs), std::move(rhs), std::move(v)};
}

CrosscheckReport coarsest_congr_crosscheck(const Environment& env, const Process& p,
                                           const Process& q, std::size_t samples,
                                           std::uint64_t seed, const Limits& limits) {
  CrosscheckReport out;
  out.obs_congr = obs_congr(env, p, q, limits).related;
  out.decide = coarsest_congr_decide(env, p, q, limits).related;
  if (out.decide != out.obs_congr) {
    out.problems.push_back("Klop decision " + std::string(out.decide ? "true" : "false") +
                           " differs from observation congruence");
  }
  TermGenerator gen(env.alphabet(), 3, seed);
  for (std::size_t i = 0; i < samples; ++i) {
    Process r = gen.next();
    ++out.samples;
    if (!weak_equiv(env, Process::sum(p, r), Process::sum(q, r), limits).related) {
      out.failing.push_back(r);
      if (out.obs_congr) {
        out.problems.push_back("congruent pair separated by r = " + print_term(r));
      }
    }
  }
  return out;
}

}  // namespace ccs
