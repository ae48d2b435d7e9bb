#include "ccs/generator.hpp"

#include <functional>

namespace ccs {

TermGenerator::TermGenerator(std::vector<LabelId> alphabet, std::size_t max_depth,
                             std::uint64_t seed)
    : alphabet_(std::move(alphabet)), max_depth_(max_depth), engine_(seed) {}

Process TermGenerator::next() { return term(max_depth_); }

Action TermGenerator::visible_action() {
  if (alphabet_.empty()) throw Error("visible action requested over an empty alphabet");
  const LabelId& l = alphabet_[below(alphabet_.size())];
  return below(2) == 0 ? Action::name(l.str()) : Action::coname(l.str());
}

Action TermGenerator::action() {
  if (alphabet_.empty() || below(2 * alphabet_.size() + 1) == 0) return Action::tau();
  return visible_action();
}

LabelSet TermGenerator::label_set() {
  if (alphabet_.empty()) throw Error("label set requested over an empty alphabet");
  LabelSet out;
  for (const auto& l : alphabet_) {
    if (below(2) == 0) out.insert(l);
  }
  if (out.empty()) out.insert(alphabet_[below(alphabet_.size())]);
  return out;
}

Relabeling TermGenerator::relabeling() {
  if (alphabet_.empty()) throw Error("relabeling requested over an empty alphabet");
  Relabeling rf;
  for (const auto& l : alphabet_) {
    if (below(2) == 0) rf.map.emplace(l, alphabet_[below(alphabet_.size())]);
  }
  if (rf.map.empty()) {
    rf.map.emplace(alphabet_[below(alphabet_.size())], alphabet_[below(alphabet_.size())]);
  }
  return rf;
}

Process TermGenerator::term(std::size_t max_depth) {
  if (max_depth == 0) return Process::nil();
  const std::size_t d = max_depth - 1;
  std::uint64_t r = below(12);
  if (r < 2) return Process::nil();
  if (r < 6) {
    Action u = action();
    return Process::prefix(std::move(u), term(d));
  }
  if (r < 9) {
    Process l = term(d);
    return Process::sum(std::move(l), term(d));
  }
  if (r < 11) {
    Process l = term(d);
    return Process::par(std::move(l), term(d));
  }
  if (alphabet_.empty()) return Process::nil();
  if (below(2) == 0) {
    LabelSet hidden = label_set();
    return Process::restr(std::move(hidden), term(d));
  }
  Relabeling rf = relabeling();
  Process body = term(d);
  return Process::relab(std::move(body), std::move(rf));
}

// ---------------------------------------------------------------------------

namespace {

struct Site {
  Process term;
  bool under_sum;  // some enclosing Sum operand is not shielded by a prefix
};

void collect(const Process& p, bool under_sum, std::vector<Site>& out) {
  out.push_back({p, under_sum});
  switch (p.kind()) {
    case TermKind::Prefix:
      collect(p.body(), false, out);
      break;
    case TermKind::Sum:
      collect(p.left(), true, out);
      collect(p.right(), true, out);
      break;
    case TermKind::Par:
      collect(p.left(), under_sum, out);
      collect(p.right(), under_sum, out);
      break;
    case TermKind::Restr:
    case TermKind::Relab:
      collect(p.body(), under_sum, out);
      break;
    case TermKind::Nil:
    case TermKind::Const:
      break;
  }
}

// Rebuilds p with its `index`-th subterm (preorder, as in collect) replaced.
Process replace_at(const Process& p, std::size_t& index, const Process& with) {
  if (index == 0) {
    index = static_cast<std::size_t>(-1);
    return with;
  }
  --index;
  switch (p.kind()) {
    case TermKind::Prefix:
      return Process::prefix(p.action(), replace_at(p.body(), index, with));
    case TermKind::Sum: {
      Process l = replace_at(p.left(), index, with);
      return Process::sum(std::move(l), replace_at(p.right(), index, with));
    }
    case TermKind::Par: {
      Process l = replace_at(p.left(), index, with);
      return Process::par(std::move(l), replace_at(p.right(), index, with));
    }
    case TermKind::Restr:
      return Process::restr(p.hidden(), replace_at(p.body(), index, with));
    case TermKind::Relab:
      return Process::relab(replace_at(p.body(), index, with), p.relabeling());
    case TermKind::Nil:
    case TermKind::Const:
      break;
  }
  return p;
}

using Rewrite = std::function<Process(const Process&)>;

void strong_rewrites(const Process& t, std::vector<Rewrite>& out) {
  out.push_back([](const Process& x) { return Process::sum(x, x); });
  out.push_back([](const Process& x) { return Process::sum(x, Process::nil()); });
  out.push_back([](const Process& x) { return Process::par(Process::nil(), x); });
  if (t.kind() == TermKind::Sum) {
    out.push_back([](const Process& x) { return Process::sum(x.right(), x.left()); });
    if (t.left().kind() == TermKind::Sum) {
      out.push_back([](const Process& x) {
        return Process::sum(x.left().left(), Process::sum(x.left().right(), x.right()));
      });
    }
  }
  if (t.kind() == TermKind::Par) {
    out.push_back([](const Process& x) { return Process::par(x.right(), x.left()); });
  }
}

void tau_law_rewrites(const Process& t, std::vector<Rewrite>& out) {
  if (t.kind() != TermKind::Prefix) return;
  // u.E -> u.tau.E
  out.push_back([](const Process& x) {
    return Process::prefix(x.action(), Process::prefix(Action::tau(), x.body()));
  });
  if (t.action().is_tau()) {
    // tau.E -> E + tau.E
    out.push_back([](const Process& x) { return Process::sum(x.body(), x); });
    // tau.(E' + E) -> E + tau.(E' + E)
    if (t.body().kind() == TermKind::Sum) {
      out.push_back([](const Process& x) { return Process::sum(x.body().right(), x); });
    }
  }
  // u.(E + tau.E') -> u.(E + tau.E') + u.E'
  const Process& b = t.body();
  if (b.kind() == TermKind::Sum && b.right().kind() == TermKind::Prefix &&
      b.right().action().is_tau()) {
    out.push_back([](const Process& x) {
      return Process::sum(x, Process::prefix(x.action(), x.body().right().body()));
    });
  }
}

}  // namespace

Process related_variant(TermGenerator& gen, const Process& p, Relation kind, int rewrites) {
  Process cur = p;
  for (int i = 0; i < rewrites; ++i) {
    std::vector<Site> sites;
    collect(cur, false, sites);
    std::size_t index = gen.below(sites.size());
    const Site& site = sites[index];

    std::vector<Rewrite> options;
    strong_rewrites(site.term, options);
    if (kind != Relation::Strong) tau_law_rewrites(site.term, options);
    if (kind == Relation::Weak && !site.under_sum) {
      // tau.E is weakly equivalent to E, and every operator but + preserves that.
      options.push_back([](const Process& x) { return Process::prefix(Action::tau(), x); });
    }
    Process replacement = options[gen.below(options.size())](site.term);
    cur = replace_at(cur, index, replacement);
  }
  return cur;
}

}  // namespace ccs
