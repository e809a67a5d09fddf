#pragma once

#include "fano/surfaces.hpp"

namespace fano {

// One side of an elementary transform over a base surface S.
struct TransformInput {
  Int degY = 0;     // (-K_Y)^3
  Int kYB = 0;      // -K_Y . B_Y
  SurfaceClass curve;  // class of B = g(B_Y) on S
  Int pa = 0;
};

enum class FanoStatus { Fano, NonFanoCandidate };

struct TransformOutput {
  Int degYp = 0;   // (-K_Y')^3
  Int kYpBp = 0;   // -K_Y' . B_Y'
  Int degX = 0;    // (-K_X)^3
  Int relK = 0;    // -K_{Y/S} . B_Y
  FanoStatus fano_prime = FanoStatus::Fano;

  bool operator==(const TransformOutput&) const = default;
};

TransformOutput transform(const TransformInput& in);

// Delta . D = -4 K_S.D - (-K_X)^2 . f^*D; callers pass K_S.D with its sign
Int discriminant_degree(Int k2_fD, Int kS_D);

SurfaceClass discriminant_union(const SurfaceClass& deltaG, const SurfaceClass& b);

// both blowdowns of X must give the same (-K_X)^3
bool double_k_check(Int degX, Int degY, Int degYp, Int kYB, Int kYpBp, Int pa);

}  // namespace fano
