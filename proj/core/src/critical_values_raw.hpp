#pragma once

#include "regimefactor/critical_values.hpp"

namespace regimefactor {

// Storage filled by tools/gen_critical_values.  Axis order:
//   trimming index: {0.05, 0.10, 0.15, 0.25}
//   nu: 1..6  (index nu-1)
//   alpha index: {0.10, 0.05, 0.01}
//   l: break count 1..8 (index l-1) for supf; null count 0..7 for seq
// Infeasible (trimming, l) cells hold NaN.
struct CriticalValueTable::Raw {
  static constexpr int kTrims = 4;
  static constexpr int kNu = 6;
  static constexpr int kAlphas = 3;
  static constexpr int kL = 8;
  double supf[kTrims][kNu][kAlphas][kL];
  double ud[kTrims][kNu][kAlphas];
  double wd[kTrims][kNu][kAlphas];
  double seq[kTrims][kNu][kAlphas][kL];
};

extern const CriticalValueTable::Raw kBuiltinCriticalValues;

} // namespace regimefactor
