// Shared test helpers: independent brute-force oracles and random inputs.
//
// The oracles below read nothing but the raw strong edges of an Lts. They
// never touch SaturatedLts or the partition code, so agreement between the
// two is a real cross-check.

#ifndef CCS_TESTS_SUPPORT_HPP
#define CCS_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ccs/equivalence.hpp"
#include "ccs/parser.hpp"

namespace oracle {

using ccs::ActionId;
using ccs::Lts;
using ccs::StateId;

using Matrix = std::vector<std::vector<char>>;

inline Matrix square(std::size_t n, char v = 0) { return Matrix(n, std::vector<char>(n, v)); }

/// Weak transition relations computed with Warshall closures.
struct Closure {
  std::size_t n = 0;
  std::size_t actions = 0;
  Matrix eps;                // reflexive-transitive tau closure
  std::vector<Matrix> weak;  // weak[a][s][t]: s =a=> t, at least one step
  std::vector<Matrix> strong;

  explicit Closure(const Lts& lts) : n(lts.size()), actions(lts.actions().size()) {
    strong.assign(actions, square(n));
    for (const auto& e : lts.edges()) strong[e.action][e.source][e.target] = 1;
    eps = strong[Lts::tau_id];
    for (std::size_t s = 0; s < n; ++s) eps[s][s] = 1;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (eps[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (eps[k][j]) eps[i][j] = 1;
    weak.assign(actions, square(n));
    for (std::size_t a = 0; a < actions; ++a) {
      // eps ; strong_a ; eps
      Matrix mid = square(n);
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t s1 = 0; s1 < n; ++s1)
          if (eps[s][s1])
            for (std::size_t s2 = 0; s2 < n; ++s2)
              if (strong[a][s1][s2]) mid[s][s2] = 1;
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t s2 = 0; s2 < n; ++s2)
          if (mid[s][s2])
            for (std::size_t t = 0; t < n; ++t)
              if (eps[s2][t]) weak[a][s][t] = 1;
    }
  }
};

/// Greatest strong bisimulation by iterated removal of violating pairs.
inline Matrix strong_gfp(const Lts& lts) {
  const std::size_t n = lts.size();
  Matrix r = square(n, 1);
  auto answered = [&](StateId s, StateId t) {
    for (const auto& e : lts.out(s)) {
      bool ok = false;
      for (const auto& f : lts.out(t)) {
        if (f.action == e.action && r[e.target][f.target]) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
    return true;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (StateId s = 0; s < n; ++s)
      for (StateId t = 0; t < n; ++t)
        if (r[s][t] && !(answered(s, t) && answered(t, s))) {
          r[s][t] = 0;
          changed = true;
        }
  }
  return r;
}

/// Greatest weak bisimulation: strong challenges, tau answered by eps,
/// visible a answered by =a=>.
inline Matrix weak_gfp(const Lts& lts, const Closure& c) {
  const std::size_t n = lts.size();
  Matrix r = square(n, 1);
  auto answered = [&](StateId s, StateId t, bool flip) {
    for (const auto& e : lts.out(s)) {
      const Matrix& resp = e.action == Lts::tau_id ? c.eps : c.weak[e.action];
      bool ok = false;
      for (StateId t2 = 0; t2 < n && !ok; ++t2) {
        if (resp[t][t2] && (flip ? r[t2][e.target] : r[e.target][t2])) ok = true;
      }
      if (!ok) return false;
    }
    return true;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (StateId s = 0; s < n; ++s)
      for (StateId t = 0; t < n; ++t)
        if (r[s][t] && !(answered(s, t, false) && answered(t, s, true))) {
          r[s][t] = 0;
          changed = true;
        }
  }
  return r;
}

/// Observation congruence from the rooted clause over a weak-bisimilarity
/// matrix: every first move is answered by a weak move of the same action,
/// with at least one step even for tau.
inline bool rooted(const Lts& lts, const Closure& c, const Matrix& weak, StateId p, StateId q) {
  auto one_way = [&](StateId s, StateId t, bool flip) {
    for (const auto& e : lts.out(s)) {
      bool ok = false;
      for (StateId t2 = 0; t2 < lts.size() && !ok; ++t2) {
        if (c.weak[e.action][t][t2] && (flip ? weak[t2][e.target] : weak[e.target][t2])) ok = true;
      }
      if (!ok) return false;
    }
    return true;
  };
  return one_way(p, q, false) && one_way(q, p, true);
}

}  // namespace oracle

namespace gen {

/// Random LTS over constants S0..S{n-1}: each state gets a random sum of
/// prefixes into other states. Returned as an environment plus the roots.
struct RandomSystem {
  ccs::Environment env;
  std::vector<ccs::Process> states;
};

inline RandomSystem random_system(std::mt19937_64& rng, std::size_t n, std::size_t max_out,
                                  unsigned tau_percent = 35) {
  RandomSystem out;
  const std::vector<std::string> labels{"a", "b"};
  for (const auto& l : labels) out.env.declare_label(ccs::LabelId(l));
  for (std::size_t i = 0; i < n; ++i) out.states.push_back(ccs::Process::constant("S" + std::to_string(i)));
  for (std::size_t i = 0; i < n; ++i) {
    ccs::Process body = ccs::Process::nil();
    const std::size_t k = rng() % (max_out + 1);
    for (std::size_t j = 0; j < k; ++j) {
      ccs::Action u = ccs::Action::tau();
      if (rng() % 100 >= tau_percent) {
        const std::string& l = labels[rng() % labels.size()];
        u = rng() % 4 == 0 ? ccs::Action::coname(l) : ccs::Action::name(l);
      }
      ccs::Process step = ccs::Process::prefix(u, out.states[rng() % n]);
      body = j == 0 ? step : ccs::Process::sum(body, step);
    }
    out.env.define("S" + std::to_string(i), body);
  }
  return out;
}

}  // namespace gen

namespace prop3 {

using ccs::Action;
using ccs::Lts;
using ccs::Process;
using ccs::SaturatedLts;
using ccs::StateId;

inline bool contains(const std::vector<StateId>& v, StateId s) {
  return std::binary_search(v.begin(), v.end(), s);
}

/// Checks the twelve EPS / weak-transition properties on the LTS of p,
/// using `other` as the second summand for the sum rules. Returns a
/// description of each violation.
inline std::vector<std::string> check(const ccs::Environment& env, const Process& p,
                                      const Process& other) {
  std::vector<std::string> bad;
  auto fail = [&](const std::string& item, const std::string& detail) {
    bad.push_back(item + ": " + detail);
  };
  SaturatedLts sat = ccs::saturate(ccs::explore_complete(env, {p}));
  const Lts& lts = sat.base();
  const std::size_t n = lts.size();
  const std::size_t na = lts.actions().size();
  auto name = [&](StateId s) { return ccs::print_term(lts.state(s)); };
  auto weak = [&](StateId s, ccs::ActionId a) {
    auto v = sat.weak_successors(s, a);
    std::sort(v.begin(), v.end());
    return v;
  };

  for (StateId s = 0; s < n; ++s) {
    const auto& eps = sat.eps(s);
    // 1, 3, 9: strong steps lift, tau steps are eps, trailing eps extends.
    for (const auto& e : lts.out(s)) {
      if (!contains(weak(s, e.action), e.target)) fail("TRANS_IMP_WEAK_TRANS", name(s));
      if (e.action == Lts::tau_id && !contains(eps, e.target)) fail("TRANS_TAU_IMP_EPS", name(s));
      for (StateId t : sat.eps(e.target)) {
        if (!contains(weak(s, e.action), t)) fail("TRANS_AND_EPS", name(s) + " -> " + name(t));
      }
      // 8: a tau step followed by a weak transition.
      if (e.action == Lts::tau_id) {
        for (ccs::ActionId a = 0; a < na; ++a) {
          for (StateId t : weak(e.target, a)) {
            if (!contains(weak(s, a), t)) fail("TRANS_TAU_AND_WEAK", name(s) + " -> " + name(t));
          }
        }
      }
    }
    for (StateId t : weak(s, Lts::tau_id)) {
      // 2
      if (!contains(eps, t)) fail("WEAK_TRANS_TAU", name(s) + " -> " + name(t));
      // 4
      bool via = false;
      for (const auto& e : lts.out(s)) {
        if (e.action == Lts::tau_id && contains(sat.eps(e.target), t)) via = true;
      }
      if (!via) fail("WEAK_TRANS_TAU_IMP_TRANS_TAU", name(s) + " -> " + name(t));
    }
    // 10
    for (StateId t : eps) {
      if (t != s && !contains(weak(s, Lts::tau_id), t)) fail("EPS_IMP_WEAK_TRANS", name(t));
    }
    for (ccs::ActionId a = 0; a < na; ++a) {
      const auto ws = weak(s, a);
      // 7: eps ; weak ; eps stays inside weak.
      for (StateId s1 : eps) {
        for (StateId s2 : weak(s1, a)) {
          for (StateId t : sat.eps(s2)) {
            if (!contains(ws, t)) fail("EPS_AND_WEAK", name(s) + " -> " + name(t));
          }
        }
      }
      // 11: first step is tau-then-weak or strong-then-eps.
      for (StateId t : ws) {
        bool split = false;
        for (const auto& e : lts.out(s)) {
          if (e.action == Lts::tau_id && contains(weak(e.target, a), t)) split = true;
          if (e.action == a && contains(sat.eps(e.target), t)) split = true;
        }
        if (!split) fail("WEAK_TRANS_cases1", name(s) + " -> " + name(t));
      }
    }
  }

  // 5, 6, 12 rebuild the LTS around a new root.
  const StateId root = lts.roots()[0];
  auto lift = [&](const Process& q, const char* item, bool eps_only) {
    SaturatedLts big = ccs::saturate(ccs::explore_complete(env, {q}));
    const StateId r = big.base().roots()[0];
    auto id_in_big = [&](StateId t) { return *big.base().index_of(lts.state(t)); };
    if (eps_only) {
      for (StateId t : sat.eps(root)) {
        if (!contains(big.eps(r), id_in_big(t))) fail(item, name(t));
      }
      return;
    }
    for (ccs::ActionId a = 0; a < na; ++a) {
      auto got = big.weak_successors(r, lts.action(a));
      std::sort(got.begin(), got.end());
      for (StateId t : weak(root, a)) {
        if (!contains(got, id_in_big(t))) fail(item, ccs::print_action(lts.action(a)) + " " + name(t));
      }
    }
  };
  const Process tau_p = Process::prefix(Action::tau(), p);
  lift(tau_p, "TAU_PREFIX_EPS", true);
  lift(tau_p, "TAU_PREFIX_WEAK_TRANS", false);
  lift(Process::sum(p, other), "WEAK_SUM1", false);
  lift(Process::sum(other, p), "WEAK_SUM2", false);
  return bad;
}

}  // namespace prop3

#endif  // CCS_TESTS_SUPPORT_HPP
