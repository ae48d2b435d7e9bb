/// \file generator.hpp
/// \brief Seeded random CCS terms and relation-preserving rewrites.

#ifndef CCS_GENERATOR_HPP
#define CCS_GENERATOR_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "ccs/equivalence.hpp"

namespace ccs {

/// Deterministic stream of closed, constant-free terms.
///
/// Draws are taken as `engine() % n` so that a seed gives the same stream
/// on every standard library.
class TermGenerator {
public:
  TermGenerator(std::vector<LabelId> alphabet, std::size_t max_depth, std::uint64_t seed);

  /// A term of depth at most max_depth. With max_depth == 0 this is always 0.
  Process next();
  Process term(std::size_t max_depth);

  /// tau, or a name or co-name over the alphabet.
  Action action();
  Action visible_action();
  /// Non-empty subset of the alphabet.
  LabelSet label_set();
  /// Non-empty map over the alphabet; may contain identity entries.
  Relabeling relabeling();

  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  bool one_in(std::uint64_t n) { return below(n) == 0; }

  const std::vector<LabelId>& alphabet() const { return alphabet_; }
  std::size_t max_depth() const { return max_depth_; }

private:
  std::vector<LabelId> alphabet_;
  std::size_t max_depth_;
  std::mt19937_64 engine_;
};

/// Applies `rewrites` random rewrites that each preserve `kind`:
/// strong-bisimilarity laws of sum and parallel anywhere, the tau-laws
/// anywhere for ObsCongr and Weak, and tau-insertion outside sum operands
/// for Weak. The result is related to p by `kind` (and so by every coarser
/// relation).
Process related_variant(TermGenerator& gen, const Process& p, Relation kind, int rewrites = 2);

}  // namespace ccs

#endif  // CCS_GENERATOR_HPP
