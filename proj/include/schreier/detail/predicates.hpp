#pragma once

#include <span>

#include "schreier/finset.hpp"

namespace schreier::detail {

// Sequence-based membership test. Used for sets that do not fit a mask and
// as the second route the mask predicates are tested against.
inline bool in_family_sequence(std::span<const Element> a, const FamilyId& f) {
  if (!a.empty() && a.back() > f.n()) return false;
  const std::size_t card = a.size();
  const bool schreier = a.empty() || a.front() >= card;
  auto has_pred_of_max = [&] {
    if (a.empty()) return false;
    const Element target = a.back() - 1;
    for (Element e : a)
      if (e == target) return true;
    return false;
  };
  switch (f.kind()) {
    case FamilyKind::BirdA:
      return !a.empty() && a.back() == f.n() && schreier;
    case FamilyKind::K:
      return a.empty() || (has_pred_of_max() && schreier);
    case FamilyKind::KPrime:
      return card <= 1 || (has_pred_of_max() && schreier);
    case FamilyKind::KPQ:
      if (a.empty()) return true;
      return card >= 2 && a[card - 1] - a[card - 2] == f.p() && card >= f.q() &&
             a.front() >= card;
  }
  return false;
}

}  // namespace schreier::detail
