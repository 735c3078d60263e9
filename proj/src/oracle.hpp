#pragma once

#include <algorithm>

#include "refine/denotation.hpp"
#include "refine/lts.hpp"

namespace refine::detail {

// Flooded trace sets evaluated directly on a bounded enumeration:
//   bot: div(w) iff some prefix of w diverges; ptr and failures absorb div.
//   d:   failures additionally hold at every divergence trace.
struct FloodedOracle {
  BoundedTraces b;
  FloodMode mode;

  FloodedOracle(const Lts& l, std::size_t depth, FloodMode m) : b(enumerate_bounded(l, depth)), mode(m) {}

  bool raw_div(const Word& w) const { return b.divergences.count(w) > 0; }

  bool div(const Word& w) const {
    if (mode != FloodMode::bot) return raw_div(w);
    for (std::size_t k = 0; k <= w.size(); ++k) {
      if (raw_div(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k)))) return true;
    }
    return false;
  }

  bool ptr(const Word& w) const { return b.partial.count(w) > 0 || (mode == FloodMode::bot && div(w)); }

  bool fail(const Word& w, const ActionSet& x) const {
    return b.is_failure(w, x) || (mode != FloodMode::none && div(w));
  }
};

}  // namespace refine::detail
