/// \file laws.hpp
/// \brief Named algebraic laws of weak equivalence and observation congruence,
/// checked on concrete instances, plus the Deng and Hennessy case analyses.

#ifndef CCS_LAWS_HPP
#define CCS_LAWS_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "ccs/equivalence.hpp"
#include "ccs/generator.hpp"

namespace ccs {

class UnknownLaw : public Error {
public:
  explicit UnknownLaw(const std::string& id) : Error("unknown law '" + id + "'") {}
};

class NotWeaklyEquivalent : public Error {
public:
  NotWeaklyEquivalent() : Error("the two processes are not weakly equivalent") {}
};

enum class MetaKind { Term, Action, Labels, Relabeling };

using Binding = std::variant<Process, Action, LabelSet, Relabeling>;
using Bindings = std::map<std::string, Binding>;

/// Either `lhs R rhs` or `STABLE lhs`.
struct Claim {
  enum class Kind { Relate, Stable };
  using Side = std::function<Process(const Bindings&)>;

  Kind kind = Kind::Relate;
  Relation relation = Relation::Weak;
  Side lhs;
  Side rhs;  // unused for Stable
  std::string text;
};

/// A law `premises => conclusion`, universally quantified over `metavars`.
struct Law {
  std::string id;
  std::vector<std::pair<std::string, MetaKind>> metavars;
  std::vector<Claim> premises;
  Claim conclusion;
  /// Metavariable pairs that random instantiation should make related
  /// (second := a variant of first), so premises hold more often.
  std::vector<std::tuple<std::string, std::string, Relation>> pairings;

  std::string statement() const;
};

/// Every law of the catalog, in a fixed order.
const std::vector<Law>& law_catalog();
/// Throws UnknownLaw.
const Law& find_law(std::string_view id);

struct ClaimResult {
  std::string text;
  bool holds = false;
  std::optional<Verdict> verdict;  // absent for Stable claims
  Process lhs;
  std::optional<Process> rhs;
};

struct LawReport {
  std::string law;
  Bindings bindings;
  std::vector<ClaimResult> premises;
  std::optional<ClaimResult> conclusion;  // evaluated only when all premises hold

  bool premises_hold() const;
  /// Vacuously true when some premise fails.
  bool passed() const;
};

/// Checks one instance. Throws Error when a metavariable is unbound or
/// bound to the wrong sort, and ExceedsCap from the checkers.
LawReport check_law(const Environment& env, const Law& law, const Bindings& bindings,
                    const Limits& limits = {});
LawReport check_law(const Environment& env, std::string_view law_id, const Bindings& bindings,
                    const Limits& limits = {});

/// Random bindings for every metavariable of `law`, honouring its pairings.
Bindings instantiate(const Law& law, TermGenerator& gen);

/// Parses the text of a binding according to the metavariable's sort:
/// a term, an action, `{a, b}` or `a, b`, or `[a->b]` or `a->b`.
Binding parse_binding(MetaKind kind, std::string_view text);
std::string print_binding(const Binding& b);

struct DengOutcome {
  std::vector<Process> case1;  // p' with p -tau-> p' and p' weakly equivalent to q
  std::vector<Process> case2;  // q' with q -tau-> q' and p weakly equivalent to q'
  bool case3 = false;          // p and q observation congruent

  bool any() const { return !case1.empty() || !case2.empty() || case3; }
};

/// Reports every case of the Deng lemma that holds. Throws
/// NotWeaklyEquivalent unless p and q are weakly equivalent.
DengOutcome deng_classify(const Environment& env, const Process& p, const Process& q,
                          const Limits& limits = {});

struct HennessyOutcome {
  bool congr = false;            // p, q observation congruent
  bool congr_tau_right = false;  // p, tau.q observation congruent
  bool congr_tau_left = false;   // tau.p, q observation congruent
  bool weak = false;             // p, q weakly equivalent, decided separately

  bool any() const { return congr || congr_tau_right || congr_tau_left; }
  /// The lemma: any() iff weak.
  bool consistent() const { return any() == weak; }
};

HennessyOutcome hennessy_classify(const Environment& env, const Process& p, const Process& q,
                                  const Limits& limits = {});

}  // namespace ccs

#endif  // CCS_LAWS_HPP
