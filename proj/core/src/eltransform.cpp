#include "fano/eltransform.hpp"

#include "fano/blowupcalc.hpp"

namespace fano {

TransformOutput transform(const TransformInput& in) {
  const Int b2 = self_int(in.curve);
  const Int kb = k_dot(in.curve);
  TransformOutput out;
  out.relK = add(in.kYB, kb);
  out.degYp = add(sub(in.degY, mul(4, out.relK)), mul(2, b2));
  out.kYpBp = sub(add(b2, mul(-2, kb)), in.kYB);
  out.degX = sub(add(sub(in.degY, mul(2, in.kYB)), mul(2, in.pa)), 2);
  bool equality = out.relK == mul(2, add(b2, 1));
  out.fano_prime = (equality && in.pa == 0) ? FanoStatus::NonFanoCandidate : FanoStatus::Fano;
  return out;
}

Int discriminant_degree(Int k2_fD, Int kS_D) { return sub(mul(-4, kS_D), k2_fD); }

SurfaceClass discriminant_union(const SurfaceClass& deltaG, const SurfaceClass& b) {
  if (deltaG.base != b.base)
    throw Error(ErrorCode::BaseMismatch, "discriminant and curve on different surfaces");
  if (deltaG.coords.size() != b.coords.size())
    throw Error(ErrorCode::DimensionMismatch, "malformed surface class");
  SurfaceClass r = deltaG;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] = add(r.coords[i], b.coords[i]);
  return r;
}

bool double_k_check(Int degX, Int degY, Int degYp, Int kYB, Int kYpBp, Int pa) {
  if (pa < 0) return false;
  Int from_y = blowup_invariants(degY, kYB, pa).degX;
  Int from_yp = blowup_invariants(degYp, kYpBp, pa).degX;
  return from_y == from_yp && from_y == degX;
}

}  // namespace fano
