#include "ccs/congruence.hpp"

#include <algorithm>
#include <set>

#include "ccs/parser.hpp"

namespace ccs {

struct Context::Node {
  Kind kind = Kind::Hole;
  std::optional<Context> inner;
  std::optional<Action> action;
  std::optional<Process> term;
  LabelSet hidden;
  Relabeling rf;
  std::size_t depth = 0;
};

Context::Context() {
  static const std::shared_ptr<const Node> hole_node = std::make_shared<Node>();
  node_ = hole_node;
}

std::shared_ptr<Context::Node> Context::wrap(Kind k, Context inner) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->depth = inner.depth() + 1;
  n->inner = std::move(inner);
  return n;
}

Context Context::prefix(Action u, Context inner) {
  auto n = wrap(Kind::Prefix, std::move(inner));
  n->action = std::move(u);
  return Context(std::move(n));
}

Context Context::sum_l(Context inner, Process right) {
  auto n = wrap(Kind::SumL, std::move(inner));
  n->term = std::move(right);
  return Context(std::move(n));
}

Context Context::sum_r(Process left, Context inner) {
  auto n = wrap(Kind::SumR, std::move(inner));
  n->term = std::move(left);
  return Context(std::move(n));
}

Context Context::par_l(Context inner, Process right) {
  auto n = wrap(Kind::ParL, std::move(inner));
  n->term = std::move(right);
  return Context(std::move(n));
}

Context Context::par_r(Process left, Context inner) {
  auto n = wrap(Kind::ParR, std::move(inner));
  n->term = std::move(left);
  return Context(std::move(n));
}

Context Context::restr(LabelSet hidden, Context inner) {
  auto n = wrap(Kind::Restr, std::move(inner));
  n->hidden = std::move(hidden);
  return Context(std::move(n));
}

Context Context::relab(Context inner, Relabeling rf) {
  auto n = wrap(Kind::Relab, std::move(inner));
  n->rf = std::move(rf);
  return Context(std::move(n));
}

Context::Kind Context::kind() const { return node_->kind; }
const Context& Context::inner() const { return *node_->inner; }
const Action& Context::action() const { return *node_->action; }
const Process& Context::term() const { return *node_->term; }
const LabelSet& Context::hidden() const { return node_->hidden; }
const Relabeling& Context::relabeling() const { return node_->rf; }
std::size_t Context::depth() const { return node_->depth; }

std::strong_ordering Context::operator<=>(const Context& other) const {
  if (node_ == other.node_) return std::strong_ordering::equal;
  const Node& a = *node_;
  const Node& b = *other.node_;
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = a.action <=> b.action; c != 0) return c;
  if (auto c = a.term <=> b.term; c != 0) return c;
  if (auto c = a.hidden <=> b.hidden; c != 0) return c;
  if (auto c = a.rf <=> b.rf; c != 0) return c;
  if (a.kind == Kind::Hole) return std::strong_ordering::equal;
  return *a.inner <=> *b.inner;
}

Process apply_context(const Context& c, const Process& p) {
  using K = Context::Kind;
  switch (c.kind()) {
    case K::Hole: return p;
    case K::Prefix: return Process::prefix(c.action(), apply_context(c.inner(), p));
    case K::SumL: return Process::sum(apply_context(c.inner(), p), c.term());
    case K::SumR: return Process::sum(c.term(), apply_context(c.inner(), p));
    case K::ParL: return Process::par(apply_context(c.inner(), p), c.term());
    case K::ParR: return Process::par(c.term(), apply_context(c.inner(), p));
    case K::Restr: return Process::restr(c.hidden(), apply_context(c.inner(), p));
    case K::Relab: return Process::relab(apply_context(c.inner(), p), c.relabeling());
  }
  return p;
}

Context compose_contexts(const Context& c1, const Context& c2) {
  using K = Context::Kind;
  switch (c1.kind()) {
    case K::Hole: return c2;
    case K::Prefix: return Context::prefix(c1.action(), compose_contexts(c1.inner(), c2));
    case K::SumL: return Context::sum_l(compose_contexts(c1.inner(), c2), c1.term());
    case K::SumR: return Context::sum_r(c1.term(), compose_contexts(c1.inner(), c2));
    case K::ParL: return Context::par_l(compose_contexts(c1.inner(), c2), c1.term());
    case K::ParR: return Context::par_r(c1.term(), compose_contexts(c1.inner(), c2));
    case K::Restr: return Context::restr(c1.hidden(), compose_contexts(c1.inner(), c2));
    case K::Relab: return Context::relab(compose_contexts(c1.inner(), c2), c1.relabeling());
  }
  return c2;
}

std::string print_context(const Context& c) {
  // A constant named "[]" prints as an atom, which is exactly where the
  // hole sits syntactically.
  return print_term(apply_context(c, Process::constant("[]")));
}

namespace {

std::vector<LabelSet> nonempty_subsets(const std::vector<LabelId>& alphabet) {
  std::vector<LabelSet> out;
  const std::size_t n = alphabet.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    LabelSet s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) s.insert(alphabet[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

// Every total function alphabet -> alphabet, with identity entries dropped.
std::vector<Relabeling> all_relabelings(const std::vector<LabelId>& alphabet) {
  std::set<Relabeling> seen;
  std::vector<Relabeling> out;
  const std::size_t n = alphabet.size();
  if (n == 0) return out;
  std::vector<std::size_t> digits(n, 0);
  for (;;) {
    Relabeling rf;
    for (std::size_t i = 0; i < n; ++i) {
      if (digits[i] != i) rf.map.emplace(alphabet[i], alphabet[digits[i]]);
    }
    if (seen.insert(rf).second) out.push_back(std::move(rf));
    std::size_t i = 0;
    while (i < n && ++digits[i] == n) digits[i++] = 0;
    if (i == n) break;
  }
  return out;
}

}  // namespace

std::vector<Context> enumerate_contexts(const std::vector<LabelId>& alphabet,
                                        std::size_t max_depth,
                                        const std::vector<Process>& fill_terms) {
  std::vector<Action> prefixes{Action::tau()};
  for (const auto& l : alphabet) {
    prefixes.push_back(Action::name(l.str()));
    prefixes.push_back(Action::coname(l.str()));
  }
  const auto subsets = nonempty_subsets(alphabet);
  const auto relabelings = all_relabelings(alphabet);

  std::set<Context> seen{Context::hole()};
  std::vector<Context> out{Context::hole()};
  std::vector<Context> layer{Context::hole()};
  for (std::size_t d = 0; d < max_depth; ++d) {
    std::vector<Context> next;
    auto add = [&](Context c) {
      if (seen.insert(c).second) next.push_back(std::move(c));
    };
    for (const Context& c : layer) {
      for (const Action& u : prefixes) add(Context::prefix(u, c));
      for (const Process& f : fill_terms) add(Context::sum_l(c, f));
      for (const Process& f : fill_terms) add(Context::sum_r(f, c));
      for (const Process& f : fill_terms) add(Context::par_l(c, f));
      for (const Process& f : fill_terms) add(Context::par_r(f, c));
      for (const LabelSet& s : subsets) add(Context::restr(s, c));
      for (const Relabeling& rf : relabelings) add(Context::relab(c, rf));
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

CongruenceReport congruence_check(const Environment& env, Relation kind,
                                  const std::vector<std::pair<Process, Process>>& pairs,
                                  std::size_t max_depth, const std::vector<Process>& fill_terms,
                                  const Limits& limits) {
  std::vector<LabelId> alphabet = env.alphabet();
  LabelSet extra;
  for (const auto& [x, y] : pairs) {
    for (const auto& l : free_labels(env, x)) extra.insert(l);
    for (const auto& l : free_labels(env, y)) extra.insert(l);
  }
  for (const auto& f : fill_terms) {
    for (const auto& l : free_labels(env, f)) extra.insert(l);
  }
  for (const auto& l : extra) {
    if (std::find(alphabet.begin(), alphabet.end(), l) == alphabet.end()) alphabet.push_back(l);
  }

  CongruenceReport report;
  report.kind = kind;
  report.depth = max_depth;
  const auto contexts = enumerate_contexts(alphabet, max_depth, fill_terms);
  report.contexts = contexts.size();
  for (const Context& c : contexts) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      Process lhs = apply_context(c, pairs[i].first);
      Process rhs = apply_context(c, pairs[i].second);
      Verdict v = check_relation(kind, env, lhs, rhs, limits);
      ++report.pairs_checked;
      if (!v.related) {
        report.all_contexts_pass = false;
        report.counterexample = CongruenceCounterexample{i, c, std::move(lhs), std::move(rhs),
                                                         std::move(v)};
        return report;
      }
    }
  }
  return report;
}

std::optional<Process> sum_equiv_counterexample(const Environment& env, const Process& p,
                                                const Process& q, const std::vector<Process>& rs,
                                                const Limits& limits) {
  for (const Process& r : rs) {
    if (!weak_equiv(env, Process::sum(p, r), Process::sum(q, r), limits).related) return r;
  }
  return std::nullopt;
}

}  // namespace ccs
