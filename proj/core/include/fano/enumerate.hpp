#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fano/atlas.hpp"
#include "fano/eltransform.hpp"

namespace fano {

inline constexpr Int kDefaultCap = 12;

// one admissible centre on a source: its image on the base, -K_Y . B_Y and genus
struct SourceCandidate {
  SurfaceClass curve;
  Int kYB = 0;
  Int pa = 0;
  std::string branch;
};

// a conic bundle Y -> S used as the starting side of an elementary transform
struct SourceBundle {
  std::string id;
  Base base = Base::P2;
  Int degY = 0;
  Int mu_other = 0;  // length of the other extremal ray of Y
  bool allows_non_fano = false;
  std::function<std::vector<SourceCandidate>(Int cap)> params;
};

struct TransformRow {
  std::vector<std::string> x_candidates;
  std::string y;
  std::string yp;  // id or "non-Fano"
  std::vector<std::string> yp_candidates;
  Base base = Base::P2;
  SurfaceClass curve;
  Int degX = 0;
  Int degY = 0;
  Int degYp = 0;
  Int pa = 0;
  Int kYB = 0;
  Int kYpBp = 0;
  std::string branch;

  bool yp_fano() const { return yp != kNonFano; }
};

struct F1Rho3Row {
  std::string x;
  Int degX = 0;
  std::string x_prime;  // rho 2 conic bundle over P2
  Int degXp = 0;
  RayType bundle_type = RayType::C2;
  Int delta_degree = 0;
};

struct FibreBlowupRow {
  std::vector<std::string> x_candidates;
  std::string x_tilde;
  Int degX = 0;
  Int degXt = 0;
  Base base = Base::P2;
  std::optional<Int> delta_degree;  // empty discriminant when unset
};

struct Rho5Row {
  std::vector<std::string> x_candidates;
  std::string y;
  std::string yp;
  std::string z;
  Int degX = 0;
};

struct DisjointPairRow {
  std::vector<std::string> x_candidates;
  std::string y1;
  std::string y2;
  Int degX = 0;
  std::optional<SurfaceClass> delta;  // bidegree of the discriminant over P1xP1
};

std::vector<SourceBundle> p2_sources(const Atlas& atlas = default_atlas());
std::vector<SourceBundle> p1p1_rho4_sources(const Atlas& atlas = default_atlas());
std::vector<SourceBundle> f1_rho4_sources(const Atlas& atlas = default_atlas());

std::vector<TransformRow> enumerate_P2(Int cap = kDefaultCap, const Atlas& atlas = default_atlas());
std::vector<TransformRow> enumerate_P1P1_rho4(Int cap = kDefaultCap,
                                              const Atlas& atlas = default_atlas());
std::vector<F1Rho3Row> enumerate_F1_rho3(const Atlas& atlas = default_atlas());
std::vector<TransformRow> enumerate_F1_rho4(Int cap = kDefaultCap,
                                            const Atlas& atlas = default_atlas());
std::vector<FibreBlowupRow> enumerate_fibre_blowups_rho4(Int cap = kDefaultCap,
                                                         const Atlas& atlas = default_atlas());
std::vector<Rho5Row> enumerate_rho5(Int cap = kDefaultCap, const Atlas& atlas = default_atlas());
// V is "P3" or "Q" (any rank one family is accepted; others give nothing)
std::vector<DisjointPairRow> enumerate_disjoint_pairs(const std::string& V,
                                                      const Atlas& atlas = default_atlas());

// every conic bundle pair stored on a rho >= 3 record must come out of an enumerator
VerifyReport crosscheck_conic_bundles(const Atlas& atlas = default_atlas());

}  // namespace fano
