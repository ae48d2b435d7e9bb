/// \file syntax.hpp
/// \brief CCS terms, actions, labels, relabelings and constant environments.

#ifndef CCS_SYNTAX_HPP
#define CCS_SYNTAX_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ccs {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class UnboundConstant : public Error {
public:
  explicit UnboundConstant(std::string name)
      : Error("unbound constant '" + name + "'"), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

private:
  std::string name_;
};

/// A state-space or step budget was exhausted.
class ExceedsCap : public Error {
public:
  using Error::Error;
};

/// A constant was re-entered while computing the successors of one term.
class UnguardedRecursion : public ExceedsCap {
public:
  explicit UnguardedRecursion(const std::string& name)
      : ExceedsCap("unguarded recursion through constant '" + name + "'") {}
};

/// An alphabet symbol. Non-empty.
class LabelId {
public:
  explicit LabelId(std::string id);
  const std::string& str() const { return id_; }
  auto operator<=>(const LabelId&) const = default;

private:
  std::string id_;
};

enum class Polarity { Name, CoName };

struct Label {
  Polarity polarity = Polarity::Name;
  LabelId base;

  static Label name(std::string id) { return {Polarity::Name, LabelId(std::move(id))}; }
  static Label coname(std::string id) { return {Polarity::CoName, LabelId(std::move(id))}; }
  auto operator<=>(const Label&) const = default;
};

Label complement(const Label& l);

/// Either tau or a visible label. Tau orders before every visible action.
class Action {
public:
  static Action tau() { return Action(); }
  static Action visible(Label l) { return Action(std::move(l)); }
  static Action name(std::string id) { return visible(Label::name(std::move(id))); }
  static Action coname(std::string id) { return visible(Label::coname(std::move(id))); }

  bool is_tau() const { return !label_.has_value(); }
  /// Precondition: !is_tau().
  const Label& label() const { return *label_; }

  auto operator<=>(const Action&) const = default;

private:
  Action() = default;
  explicit Action(Label l) : label_(std::move(l)) {}
  std::optional<Label> label_;
};

using LabelSet = std::set<LabelId>;

/// Finite name-to-name map, identity outside its domain, extended to both polarities.
struct Relabeling {
  std::map<LabelId, LabelId> map;

  LabelId apply(const LabelId& id) const;
  auto operator<=>(const Relabeling&) const = default;
};

Label apply_relabeling(const Relabeling& rf, const Label& l);
Action apply_relabeling(const Relabeling& rf, const Action& u);

enum class TermKind { Nil, Prefix, Sum, Par, Restr, Relab, Const };

/// Immutable CCS term with shared subterms. Equality and ordering are
/// structural; the hash is cached at construction.
class Process {
public:
  Process();  // nil

  static Process nil() { return Process(); }
  static Process prefix(Action u, Process body);
  static Process sum(Process left, Process right);
  static Process par(Process left, Process right);
  static Process restr(LabelSet hidden, Process body);
  static Process relab(Process body, Relabeling rf);
  static Process constant(std::string name);

  TermKind kind() const;
  const Action& action() const;       // Prefix
  const Process& body() const;        // Prefix, Restr, Relab
  const Process& left() const;        // Sum, Par
  const Process& right() const;       // Sum, Par
  const LabelSet& hidden() const;     // Restr
  const Relabeling& relabeling() const;  // Relab
  const std::string& name() const;    // Const

  std::size_t hash() const;
  /// Number of syntax nodes, counting shared subterms once per occurrence.
  std::size_t size() const;
  /// Height of the syntax tree; nil and constants have depth 0.
  std::size_t depth() const;

  bool operator==(const Process& other) const;
  std::strong_ordering operator<=>(const Process& other) const;

private:
  struct Node;
  explicit Process(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct ProcessHash {
  std::size_t operator()(const Process& p) const { return p.hash(); }
};

/// Defining equations for constants plus the declared finite alphabet.
class Environment {
public:
  /// Adds or replaces a definition; keeps first-definition order.
  void define(const std::string& name, Process body);
  /// Appends to the alphabet unless already present.
  void declare_label(const LabelId& id);

  bool is_defined(std::string_view name) const;
  /// Throws UnboundConstant.
  const Process& definition(std::string_view name) const;
  const std::vector<std::pair<std::string, Process>>& definitions() const { return defs_; }

  /// Declaration order.
  const std::vector<LabelId>& alphabet() const { return alphabet_; }
  bool has_label(const LabelId& id) const;
  /// tau plus a name and a co-name per alphabet symbol.
  std::size_t action_count() const { return 2 * alphabet_.size() + 1; }

  /// Throws UnboundConstant if some definition refers to an undefined
  /// constant, and Error if a definition uses a label outside the alphabet.
  void validate() const;

private:
  std::vector<std::pair<std::string, Process>> defs_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<LabelId> alphabet_;
};

/// Base labels occurring in prefixes of p or of any constant reachable from p.
/// Restriction does not remove labels.
LabelSet free_labels(const Environment& env, const Process& p);

/// Every base label mentioned anywhere in p (prefixes, restriction sets,
/// relabeling maps), without unfolding constants.
LabelSet mentioned_labels(const Process& p);

/// Constant names referenced by p, without unfolding.
std::set<std::string> referenced_constants(const Process& p);

}  // namespace ccs

template <>
struct std::hash<ccs::Process> {
  std::size_t operator()(const ccs::Process& p) const noexcept { return p.hash(); }
};

#endif  // CCS_SYNTAX_HPP
