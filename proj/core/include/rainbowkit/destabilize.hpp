#pragma once

#include <cstdint>
#include <optional>

#include "rainbowkit/certificate.hpp"

namespace rainbowkit {

/// Resource bounds for the destabilization search. The search is
/// deterministic for a fixed budget; `seed` only matters to callers that
/// derive randomized workloads from the same configuration.
struct Budget {
  std::int64_t max_expansions = 20000;
  std::int64_t max_queue = 200000;
  std::uint64_t seed = 0;
  bool allow_conjugation = true;
  bool greedy = false;  // beam of width 1; with allow_conjugation=false this
                        // is the "conjugation-free greedy" profile

  Budget scaled(int factor) const {
    Budget b = *this;
    b.max_expansions *= factor;
    b.max_queue *= factor;
    return b;
  }
};

/// One-sided decision: a verified certificate, or Unknown. Never a "no".
struct DestabilizeOutcome {
  std::optional<DestabilizationCertificate> certificate;
  std::int64_t expansions = 0;

  bool certified() const { return certificate.has_value(); }
};

/// Bounded best-first search for a full destabilization of the closure of w,
/// staged with conjugation moves enabled only after the plain move set is
/// exhausted within its share of the budget.
DestabilizeOutcome is_fully_destabilizable(const BraidWord& w,
                                           const Budget& budget = {});

/// Builds a fully destabilizable word by inverse-replaying stabilizations,
/// rotations, relations and pair insertions from the c-strand identity,
/// together with the ground-truth certificate. `complexity` scales the number
/// of obfuscating moves; words are kept to at most `max_letters` letters.
std::pair<BraidWord, DestabilizationCertificate> random_fully_destabilizable(
    std::uint64_t seed, int b, int c, int complexity, int max_letters = 30);

}  // namespace rainbowkit
