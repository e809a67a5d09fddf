#pragma once

#include <utility>
#include <vector>

#include "fano/checked.hpp"

namespace fano {

// Invariants of X = Bl_C Y: (-K_X)^3, (-K_X)^2.E, (-K_X).E^2, E^3.
struct BlowupResult {
  Int degX = 0;
  Int k2E = 0;
  Int kE2 = 0;
  Int E3 = 0;

  bool operator==(const BlowupResult&) const = default;
};

// kC = -K_Y . C, pa = arithmetic genus of C
BlowupResult blowup_invariants(Int degY, Int kC, Int pa);

// necessary conditions only; never a proof that X is Fano
bool fano_filter(Int degY, Int kC, Int pa);

// (pa, kC) pairs where the degree drops by exactly four
std::vector<std::pair<Int, Int>> deficit4_cases();

// D . B_Y < (-K_Y)^2 . D
bool center_divisor_bound(Int dB, Int k2D);

// mu1 + mu2 > r_V
bool mu_sum_filter(Int mu1, Int mu2, Int rV);

}  // namespace fano
