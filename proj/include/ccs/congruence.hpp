/// \file congruence.hpp
/// \brief One-hole contexts and bounded-depth congruence checking.

#ifndef CCS_CONGRUENCE_HPP
#define CCS_CONGRUENCE_HPP

#include <compare>
#include <memory>
#include <optional>
#include <vector>

#include "ccs/equivalence.hpp"

namespace ccs {

/// A term with exactly one hole. Immutable; compared structurally.
class Context {
public:
  enum class Kind { Hole, Prefix, SumL, SumR, ParL, ParR, Restr, Relab };

  Context();  // the hole

  static Context hole() { return Context(); }
  static Context prefix(Action u, Context inner);
  static Context sum_l(Context inner, Process right);
  static Context sum_r(Process left, Context inner);
  static Context par_l(Context inner, Process right);
  static Context par_r(Process left, Context inner);
  static Context restr(LabelSet hidden, Context inner);
  static Context relab(Context inner, Relabeling rf);

  Kind kind() const;
  const Context& inner() const;          // every kind but Hole
  const Action& action() const;          // Prefix
  const Process& term() const;           // SumL, SumR, ParL, ParR
  const LabelSet& hidden() const;        // Restr
  const Relabeling& relabeling() const;  // Relab
  /// Number of operators between the root and the hole.
  std::size_t depth() const;

  bool operator==(const Context& other) const { return (*this <=> other) == 0; }
  std::strong_ordering operator<=>(const Context& other) const;

private:
  struct Node;
  explicit Context(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static std::shared_ptr<Node> wrap(Kind k, Context inner);
  std::shared_ptr<const Node> node_;
};

/// Fills the hole of c with p.
Process apply_context(const Context& c, const Process& p);

/// The context c1[c2]: apply(compose(c1, c2), p) == apply(c1, apply(c2, p)).
Context compose_contexts(const Context& c1, const Context& c2);

/// Renders the hole as `[]`, e.g. `tau.('c.0 | [])`.
std::string print_context(const Context& c);

/// Every context with at most max_depth operators above the hole, in
/// breadth-first order, without duplicates. Each layer wraps the previous
/// one in: prefixes (tau, then a and 'a per label), SumL, SumR, ParL and
/// ParR with each fill term, restriction by each non-empty label subset,
/// and relabeling by each function alphabet -> alphabet.
std::vector<Context> enumerate_contexts(const std::vector<LabelId>& alphabet,
                                        std::size_t max_depth,
                                        const std::vector<Process>& fill_terms);

struct CongruenceCounterexample {
  std::size_t pair_index;
  Context context;
  Process lhs;  // context filled with the pair's first term
  Process rhs;
  Verdict verdict;
};

struct CongruenceReport {
  Relation kind = Relation::Strong;
  std::size_t depth = 0;
  std::size_t contexts = 0;       // enumerated contexts
  std::size_t pairs_checked = 0;  // (pair, context) checks performed
  bool all_contexts_pass = true;
  std::optional<CongruenceCounterexample> counterexample;  // first failure in enumeration order
};

/// For every pair (x, y) and every enumerated context c, checks
/// R(c[x], c[y]), stopping at the first failure. The alphabet is the
/// environment's, extended by the free labels of pairs and fill terms.
CongruenceReport congruence_check(const Environment& env, Relation kind,
                                  const std::vector<std::pair<Process, Process>>& pairs,
                                  std::size_t max_depth, const std::vector<Process>& fill_terms,
                                  const Limits& limits = {});

/// First r in `rs` with p + r and q + r not weakly equivalent.
std::optional<Process> sum_equiv_counterexample(const Environment& env, const Process& p,
                                                const Process& q, const std::vector<Process>& rs,
                                                const Limits& limits = {});

}  // namespace ccs

#endif  // CCS_CONGRUENCE_HPP
