#include "ccs/syntax.hpp"

#include <algorithm>
#include <functional>

namespace ccs {

LabelId::LabelId(std::string id) : id_(std::move(id)) {
  if (id_.empty()) {
    throw Error("label identifier must be non-empty");
  }
}

Label complement(const Label& l) {
  return {l.polarity == Polarity::Name ? Polarity::CoName : Polarity::Name, l.base};
}

LabelId Relabeling::apply(const LabelId& id) const {
  auto it = map.find(id);
  return it == map.end() ? id : it->second;
}

Label apply_relabeling(const Relabeling& rf, const Label& l) {
  return {l.polarity, rf.apply(l.base)};
}

Action apply_relabeling(const Relabeling& rf, const Action& u) {
  if (u.is_tau()) {
    return u;
  }
  return Action::visible(apply_relabeling(rf, u.label()));
}

// ---------------------------------------------------------------------------

struct Process::Node {
  TermKind kind = TermKind::Nil;
  std::optional<Action> action;
  std::optional<Process> first;   // body or left operand
  std::optional<Process> second;  // right operand
  LabelSet hidden;
  Relabeling rf;
  std::string name;
  std::size_t hash = 0;
  std::size_t size = 1;
  std::size_t depth = 0;

  Node() = default;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  // boost::hash_combine, 64-bit variant
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 12) + (seed >> 4));
}

std::size_t hash_label(const Label& l) {
  return mix(std::hash<std::string>{}(l.base.str()), l.polarity == Polarity::Name ? 1 : 2);
}

std::size_t hash_action(const Action& u) {
  return u.is_tau() ? 0x7a75ULL : hash_label(u.label());
}

}  // namespace

// Every default-constructed Process shares one nil node.
Process::Process() {
  static const std::shared_ptr<const Node> nil_node = [] {
    auto n = std::shared_ptr<Node>(new Node{});
    n->kind = TermKind::Nil;
    n->hash = 0x51ed27ULL;
    return std::shared_ptr<const Node>(n);
  }();
  node_ = nil_node;
}

Process Process::prefix(Action u, Process body) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Prefix;
  n->hash = mix(mix(1, hash_action(u)), body.hash());
  n->size = 1 + body.size();
  n->depth = 1 + body.depth();
  n->action = std::move(u);
  n->first = std::move(body);
  return Process(std::move(n));
}

Process Process::sum(Process left, Process right) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Sum;
  n->hash = mix(mix(2, left.hash()), right.hash());
  n->size = 1 + left.size() + right.size();
  n->depth = 1 + std::max(left.depth(), right.depth());
  n->first = std::move(left);
  n->second = std::move(right);
  return Process(std::move(n));
}

Process Process::par(Process left, Process right) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Par;
  n->hash = mix(mix(3, left.hash()), right.hash());
  n->size = 1 + left.size() + right.size();
  n->depth = 1 + std::max(left.depth(), right.depth());
  n->first = std::move(left);
  n->second = std::move(right);
  return Process(std::move(n));
}

Process Process::restr(LabelSet hidden, Process body) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Restr;
  std::size_t h = 4;
  for (const auto& l : hidden) {
    h = mix(h, std::hash<std::string>{}(l.str()));
  }
  n->hash = mix(h, body.hash());
  n->size = 1 + body.size();
  n->depth = 1 + body.depth();
  n->hidden = std::move(hidden);
  n->first = std::move(body);
  return Process(std::move(n));
}

Process Process::relab(Process body, Relabeling rf) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Relab;
  std::size_t h = 5;
  for (const auto& [from, to] : rf.map) {
    h = mix(mix(h, std::hash<std::string>{}(from.str())), std::hash<std::string>{}(to.str()));
  }
  n->hash = mix(h, body.hash());
  n->size = 1 + body.size();
  n->depth = 1 + body.depth();
  n->rf = std::move(rf);
  n->first = std::move(body);
  return Process(std::move(n));
}

Process Process::constant(std::string name) {
  if (name.empty()) {
    throw Error("constant name must be non-empty");
  }
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Const;
  n->hash = mix(6, std::hash<std::string>{}(name));
  n->name = std::move(name);
  return Process(std::move(n));
}

TermKind Process::kind() const { return node_->kind; }
const Action& Process::action() const { return *node_->action; }
const Process& Process::body() const { return *node_->first; }
const Process& Process::left() const { return *node_->first; }
const Process& Process::right() const { return *node_->second; }
const LabelSet& Process::hidden() const { return node_->hidden; }
const Relabeling& Process::relabeling() const { return node_->rf; }
const std::string& Process::name() const { return node_->name; }
std::size_t Process::hash() const { return node_->hash; }
std::size_t Process::size() const { return node_->size; }
std::size_t Process::depth() const { return node_->depth; }

bool Process::operator==(const Process& other) const {
  if (node_ == other.node_) {
    return true;
  }
  if (node_->hash != other.node_->hash || node_->kind != other.node_->kind) {
    return false;
  }
  return (*this <=> other) == 0;
}

std::strong_ordering Process::operator<=>(const Process& other) const {
  if (node_ == other.node_) {
    return std::strong_ordering::equal;
  }
  const Node& a = *node_;
  const Node& b = *other.node_;
  if (auto c = a.kind <=> b.kind; c != 0) {
    return c;
  }
  switch (a.kind) {
    case TermKind::Nil:
      return std::strong_ordering::equal;
    case TermKind::Prefix:
      if (auto c = *a.action <=> *b.action; c != 0) return c;
      return *a.first <=> *b.first;
    case TermKind::Sum:
    case TermKind::Par:
      if (auto c = *a.first <=> *b.first; c != 0) return c;
      return *a.second <=> *b.second;
    case TermKind::Restr:
      if (auto c = a.hidden <=> b.hidden; c != 0) return c;
      return *a.first <=> *b.first;
    case TermKind::Relab:
      if (auto c = a.rf <=> b.rf; c != 0) return c;
      return *a.first <=> *b.first;
    case TermKind::Const:
      return a.name <=> b.name;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------

void Environment::define(const std::string& name, Process body) {
  if (auto it = index_.find(name); it != index_.end()) {
    defs_[it->second].second = std::move(body);
    return;
  }
  index_.emplace(name, defs_.size());
  defs_.emplace_back(name, std::move(body));
}

void Environment::declare_label(const LabelId& id) {
  if (!has_label(id)) {
    alphabet_.push_back(id);
  }
}

bool Environment::is_defined(std::string_view name) const {
  return index_.find(name) != index_.end();
}

const Process& Environment::definition(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) {
    throw UnboundConstant(std::string(name));
  }
  return defs_[it->second].second;
}

bool Environment::has_label(const LabelId& id) const {
  for (const auto& l : alphabet_) {
    if (l == id) return true;
  }
  return false;
}

void Environment::validate() const {
  for (const auto& [name, body] : defs_) {
    for (const auto& c : referenced_constants(body)) {
      if (!is_defined(c)) {
        throw UnboundConstant(c);
      }
    }
    for (const auto& l : mentioned_labels(body)) {
      if (!has_label(l)) {
        throw Error("label '" + l.str() + "' used in agent " + name + " is not in the alphabet");
      }
    }
  }
}

// ---------------------------------------------------------------------------

namespace {

template <typename Visit>
void walk(const Process& p, Visit&& visit) {
  visit(p);
  switch (p.kind()) {
    case TermKind::Prefix:
    case TermKind::Restr:
    case TermKind::Relab:
      walk(p.body(), visit);
      break;
    case TermKind::Sum:
    case TermKind::Par:
      walk(p.left(), visit);
      walk(p.right(), visit);
      break;
    case TermKind::Nil:
    case TermKind::Const:
      break;
  }
}

}  // namespace

LabelSet free_labels(const Environment& env, const Process& p) {
  LabelSet out;
  std::set<std::string> seen;
  std::vector<Process> pending{p};
  while (!pending.empty()) {
    Process next = std::move(pending.back());
    pending.pop_back();
    walk(next, [&](const Process& t) {
      if (t.kind() == TermKind::Prefix && !t.action().is_tau()) {
        out.insert(t.action().label().base);
      } else if (t.kind() == TermKind::Const && seen.insert(t.name()).second) {
        pending.push_back(env.definition(t.name()));
      }
    });
  }
  return out;
}

LabelSet mentioned_labels(const Process& p) {
  LabelSet out;
  walk(p, [&](const Process& t) {
    switch (t.kind()) {
      case TermKind::Prefix:
        if (!t.action().is_tau()) out.insert(t.action().label().base);
        break;
      case TermKind::Restr:
        out.insert(t.hidden().begin(), t.hidden().end());
        break;
      case TermKind::Relab:
        for (const auto& [from, to] : t.relabeling().map) {
          out.insert(from);
          out.insert(to);
        }
        break;
      default:
        break;
    }
  });
  return out;
}

std::set<std::string> referenced_constants(const Process& p) {
  std::set<std::string> out;
  walk(p, [&](const Process& t) {
    if (t.kind() == TermKind::Const) out.insert(t.name());
  });
  return out;
}

}  // namespace ccs
