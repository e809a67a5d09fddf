#include "fano/blowupcalc.hpp"

namespace fano {

BlowupResult blowup_invariants(Int degY, Int kC, Int pa) {
  if (pa < 0) throw Error(ErrorCode::InvalidArgument, "arithmetic genus must be nonnegative");
  BlowupResult r;
  Int two_pa = mul(2, pa);
  r.degX = sub(add(sub(degY, mul(2, kC)), two_pa), 2);
  r.k2E = add(sub(kC, two_pa), 2);
  r.kE2 = sub(two_pa, 2);
  r.E3 = neg(sub(add(kC, two_pa), 2));
  return r;
}

bool fano_filter(Int degY, Int kC, Int pa) {
  if (pa < 0) return false;
  if (kC <= sub(mul(2, pa), 2)) return false;
  BlowupResult r = blowup_invariants(degY, kC, pa);
  return r.degX > 0 && r.degX < degY && r.k2E > 0;
}

std::vector<std::pair<Int, Int>> deficit4_cases() { return {{0, 1}, {1, 2}, {2, 3}}; }

bool center_divisor_bound(Int dB, Int k2D) { return dB < k2D; }

bool mu_sum_filter(Int mu1, Int mu2, Int rV) { return add(mu1, mu2) > rV; }

}  // namespace fano
