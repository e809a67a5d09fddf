#include "fano/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "fano/blowupcalc.hpp"

namespace fano {

namespace {

// genus of a smooth plane curve of degree d
Int plane_genus(Int d) { return (d - 1) * (d - 2) / 2; }

bool valid_bidegree(Int a, Int b) {
  if (a < 0 || b < 0) return false;
  if (a == 0) return b == 1;
  if (b == 0) return a == 1;
  return true;
}

Int degree_of(const Atlas& atlas, const std::string& id) { return atlas.lookup(id).degree; }

Int extent_of(const SurfaceClass& c) {
  Int m = 0;
  for (Int v : c.coords) m = std::max(m, v < 0 ? -v : v);
  return m;
}

struct Stage {
  int rho_x = 3;
  std::vector<std::string> targets;  // admissible Fano targets, identified by degree
  // narrow the degree matches for one candidate; default keeps them all
  std::function<std::vector<std::string>(const SourceBundle&, const SourceCandidate&,
                                         const std::vector<std::string>&)>
      resolve;
  // extra per-source admissibility once the target is known
  std::function<bool(const SourceBundle&, const SourceCandidate&, const std::string& yp)> accept;
  bool sort_curve = false;  // P1xP1 rows print (d1, d2) with d1 <= d2
};

std::vector<std::string> x_for(const Atlas& atlas, int rho, const TransformRow& r) {
  IdentifyHints h;
  h.edges.push_back({r.y, r.pa, r.kYB, EdgeKind::Curve});
  if (r.yp_fano()) h.edges.push_back({r.yp, r.pa, r.kYpBp, EdgeKind::Curve});
  return atlas.identify(rho, r.degX, h);
}

bool row_less(const TransformRow& a, const TransformRow& b) {
  if (a.degX != b.degX) return a.degX < b.degX;
  if (a.y != b.y) return id_less(a.y, b.y);
  if (a.yp != b.yp) return id_less(a.yp, b.yp);
  if (a.curve.coords != b.curve.coords) return a.curve.coords < b.curve.coords;
  return std::tie(a.kYB, a.pa) < std::tie(b.kYB, b.pa);
}

std::vector<TransformRow> run(const std::vector<SourceBundle>& sources, const Stage& st, Int cap,
                              const Atlas& atlas) {
  if (cap < 1) throw Error(ErrorCode::InvalidArgument, "search cap must be positive");
  std::map<Int, std::vector<std::string>> by_degree;
  for (const auto& t : st.targets) by_degree[degree_of(atlas, t)].push_back(t);

  std::vector<TransformRow> rows;
  std::set<std::tuple<std::string, std::string, std::vector<Int>, Int, Int>> seen;
  for (const auto& src : sources) {
    for (const auto& c : src.params(cap)) {
      if (!fano_filter(src.degY, c.kYB, c.pa)) continue;
      TransformOutput out = transform({src.degY, c.kYB, c.curve, c.pa});

      TransformRow r;
      r.y = src.id;
      r.base = src.base;
      r.curve = c.curve;
      r.degX = out.degX;
      r.degY = src.degY;
      r.degYp = out.degYp;
      r.pa = c.pa;
      r.kYB = c.kYB;
      r.kYpBp = out.kYpBp;
      r.branch = c.branch;

      if (out.fano_prime == FanoStatus::NonFanoCandidate) {
        if (!src.allows_non_fano) continue;
        r.yp = kNonFano;
      } else {
        auto it = by_degree.find(out.degYp);
        if (it == by_degree.end()) continue;
        r.yp_candidates = it->second;
        auto picked = st.resolve ? st.resolve(src, c, r.yp_candidates) : r.yp_candidates;
        if (picked.size() != 1) continue;
        r.yp = picked.front();
        // each unordered pair once: smaller degree first, ties by id
        if (out.degYp < src.degY) continue;
        if (out.degYp == src.degY && id_less(r.yp, r.y)) continue;
      }
      if (st.accept && !st.accept(src, c, r.yp)) continue;

      if (st.sort_curve) std::sort(r.curve.coords.begin(), r.curve.coords.end());
      auto key = std::make_tuple(r.y, r.yp, r.curve.coords, r.kYB, r.pa);
      if (!seen.insert(key).second) continue;
      if (extent_of(c.curve) >= cap)
        throw Error(ErrorCode::CapExhausted,
                    src.id + ": surviving centre at the search cap " + std::to_string(cap));
      r.x_candidates = x_for(atlas, st.rho_x, r);
      rows.push_back(std::move(r));
    }
  }
  std::sort(rows.begin(), rows.end(), row_less);
  return rows;
}

std::vector<std::string> ids_of(const std::vector<SourceBundle>& s) {
  std::vector<std::string> out;
  for (const auto& x : s) out.push_back(x.id);
  return out;
}

// fibre parity of the P1-bundles over P1xP1; the transform along B shifts it by deg B
const std::map<std::string, std::pair<int, int>>& p1p1_parity() {
  static const std::map<std::string, std::pair<int, int>> m{
      {"3-17", {1, 1}}, {"3-25", {1, 1}}, {"3-27", {0, 0}}, {"3-28", {0, 1}}, {"3-31", {1, 1}}};
  return m;
}

}  // namespace

// ---------------------------------------------------------------- P2

std::vector<SourceBundle> p2_sources(const Atlas& atlas) {
  std::vector<SourceBundle> s;
  auto add = [&](const char* id, Int mu, bool nf, auto fn) {
    s.push_back({id, Base::P2, degree_of(atlas, id), mu, nf, fn});
  };
  add("2-24", 1, false, [](Int) {
    return std::vector<SourceCandidate>{{p2(2), 2, 0, "section"}};
  });
  add("2-27", 1, false, [](Int cap) {
    std::vector<SourceCandidate> v{{p2(1), 1, 0, "fibre"}};
    for (Int d = 1; d <= cap; ++d) v.push_back({p2(d), 2 * d, plane_genus(d), "disjoint"});
    return v;
  });
  add("2-31", 1, false, [](Int cap) {
    std::vector<SourceCandidate> v{{p2(1), 1, 0, "fibre"}};
    for (Int d = 1; d <= cap; ++d) v.push_back({p2(d), 3 * d, plane_genus(d), "disjoint"});
    return v;
  });
  // B meets the two rulings in d1 and d2; both projections keep the genus
  add("2-32", 2, false, [](Int cap) {
    std::vector<SourceCandidate> v{{p2(1), 2, 0, "section"}};
    for (Int d1 = 1; d1 <= cap; ++d1)
      for (Int d2 = 1; d2 <= cap; ++d2)
        if (plane_genus(d1) == plane_genus(d2))
          v.push_back({p2(d1), 2 * (d1 + d2), plane_genus(d1), "section"});
    return v;
  });
  // m = B_Y . (fibre of the projection to P1), bounded by (-K)^2 . fibre = 9
  add("2-34", 3, true, [](Int cap) {
    std::vector<SourceCandidate> v;
    for (Int d = 1; d <= cap; ++d)
      for (Int m = 0; center_divisor_bound(m, 9); ++m)
        v.push_back({p2(d), 2 * m + 3 * d, plane_genus(d), "m=" + std::to_string(m)});
    return v;
  });
  // u = B_Y . (negative section) - d
  add("2-35", 2, false, [](Int cap) {
    std::vector<SourceCandidate> v{{p2(1), 2, 0, "u=-1"}};
    for (Int d = 1; d <= cap; ++d)
      for (Int u = 0; u <= 1; ++u)
        v.push_back({p2(d), 4 * d + 2 * u, plane_genus(d), "u=" + std::to_string(u)});
    return v;
  });
  add("2-36", 1, false, [](Int cap) {
    std::vector<SourceCandidate> v;
    for (Int d = 1; d <= cap; ++d) v.push_back({p2(d), 5 * d, plane_genus(d), "disjoint"});
    return v;
  });
  return s;
}

std::vector<TransformRow> enumerate_P2(Int cap, const Atlas& atlas) {
  auto sources = p2_sources(atlas);
  std::map<std::string, Int> mu;
  for (const auto& x : sources) mu[x.id] = x.mu_other;
  Stage st;
  st.rho_x = 3;
  st.targets = ids_of(sources);
  st.accept = [mu](const SourceBundle& src, const SourceCandidate& c, const std::string& yp) {
    if (src.id != "2-34" || yp == kNonFano) return true;
    return c.curve.coords[0] < 3 + mu.at(yp);
  };
  return run(sources, st, cap, atlas);
}

// ---------------------------------------------------------------- P1 x P1

std::vector<SourceBundle> p1p1_rho4_sources(const Atlas& atlas) {
  std::vector<SourceBundle> s;
  auto add = [&](const char* id, bool nf, auto fn) {
    s.push_back({id, Base::P1xP1, degree_of(atlas, id), 0, nf, fn});
  };
  add("3-17", false, [](Int) {
    return std::vector<SourceCandidate>{{p1p1(1, 1), 2, 0, "section"}};
  });
  // the curve projects isomorphically to each pair of factors
  add("3-27", true, [](Int cap) {
    std::vector<SourceCandidate> v{{p1p1(0, 1), 2, 0, "fibre"}};
    for (Int a = 0; a <= cap; ++a)
      for (Int b = 0; b <= cap; ++b)
        for (Int c = 0; c <= cap; ++c) {
          if (!valid_bidegree(a, b) || !valid_bidegree(b, c) || !valid_bidegree(c, a)) continue;
          Int g1 = (a - 1) * (b - 1), g2 = (b - 1) * (c - 1), g3 = (c - 1) * (a - 1);
          if (g1 != g2 || g2 != g3) continue;
          v.push_back({p1p1(a, b), 2 * (a + b + c), g1,
                       "tridegree " + std::to_string(a) + "," + std::to_string(b) + "," +
                           std::to_string(c)});
        }
    return v;
  });
  add("3-28", true, [](Int cap) {
    std::vector<SourceCandidate> v{{p1p1(0, 1), 2, 0, "fibre"}};
    for (Int d2 = 0; d2 <= cap; ++d2) {
      v.push_back({p1p1(1, d2), 3 + 2 * d2, 0, "disjoint"});
      if (d2 >= 1 && 2 * d2 <= cap)
        v.push_back({p1p1(2 * d2, d2), 6 * d2 + 2 * d2, (2 * d2 - 1) * (d2 - 1), "disjoint"});
      v.push_back({p1p1(1, d2), 1 + 2 * d2, 0, "gamma"});
    }
    return v;
  });
  add("3-31", false, [](Int cap) {
    std::vector<SourceCandidate> v;
    for (Int a = 0; a <= cap; ++a)
      for (Int b = 0; b <= cap; ++b)
        if (valid_bidegree(a, b)) v.push_back({p1p1(a, b), 3 * (a + b), (a - 1) * (b - 1), "disjoint"});
    return v;
  });
  // a fibre of the blowup, or a line / twisted cubic / elliptic quartic away from both lines
  add("3-25", false, [](Int cap) {
    std::vector<SourceCandidate> v{{p1p1(1, 0), 1, 0, "fibre"}};
    const std::set<std::pair<Int, Int>> allowed{{0, 4}, {0, 12}, {1, 16}};
    for (Int e = 1; e <= cap; ++e) {
      Int pa = (e - 1) * (e - 1);
      if (allowed.count({pa, 4 * e})) v.push_back({p1p1(e, e), 4 * e, pa, "disjoint"});
    }
    return v;
  });
  return s;
}

std::vector<TransformRow> enumerate_P1P1_rho4(Int cap, const Atlas& atlas) {
  auto sources = p1p1_rho4_sources(atlas);
  Stage st;
  st.rho_x = 4;
  st.targets = ids_of(sources);
  st.sort_curve = true;
  st.resolve = [](const SourceBundle& src, const SourceCandidate& c,
                  const std::vector<std::string>& cands) {
    const auto& par = p1p1_parity();
    auto [p1, p2] = par.at(src.id);
    std::pair<int, int> want{static_cast<int>((p1 + c.curve.coords[0]) % 2),
                             static_cast<int>((p2 + c.curve.coords[1]) % 2)};
    std::vector<std::string> out;
    for (const auto& t : cands) {
      auto q = par.at(t);
      bool mixed = want.first != want.second;
      bool tmixed = q.first != q.second;
      if (mixed ? tmixed : q == want) out.push_back(t);
    }
    return out;
  };
  return run(sources, st, cap, atlas);
}

// ---------------------------------------------------------------- F1, rho 3

std::vector<F1Rho3Row> enumerate_F1_rho3(const Atlas& atlas) {
  std::vector<F1Rho3Row> out;
  for (const FanoRecord* r : atlas.list(RecordFilter{2, {}, {}, {}})) {
    std::vector<const ExtremalRayDesc*> rays;
    for (const auto& x : r->rays)
      for (int k = 0; k < x.count; ++k) rays.push_back(&x);
    if (rays.size() != 2) continue;
    std::set<std::string> done;
    for (int i = 0; i < 2; ++i) {
      const ExtremalRayDesc& f = *rays[i];
      const ExtremalRayDesc& h = *rays[1 - i];
      if (f.type != RayType::C1 && f.type != RayType::C2) continue;
      if (!f.delta || f.delta->base != Base::P2) continue;
      if (h.type == RayType::E3_or_E4 || h.type == RayType::E5) continue;
      if (h.type == RayType::C1) continue;
      if (h.type == RayType::E1) {
        const FanoRecord* t = atlas.find(h.target);
        if (f.type != RayType::C2 || !t || t->index != 2) continue;
      }
      Int degX = r->degree - 6;
      if (degX <= 0) continue;
      Int delta = f.type == RayType::C1 ? f.delta->coords[0] : 0;
      IdentifyHints hint;
      hint.conic_bases = {Base::F1};
      auto xs = atlas.identify(3, degX, hint);
      std::string x = xs.size() == 1 ? xs.front() : std::string();
      if (!done.insert(x + "/" + std::to_string(delta)).second) continue;
      out.push_back({x, degX, r->id, r->degree, f.type, delta});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const F1Rho3Row& a, const F1Rho3Row& b) { return id_less(a.x, b.x); });
  return out;
}

// ---------------------------------------------------------------- F1, rho 4

std::vector<SourceBundle> f1_rho4_sources(const Atlas& atlas) {
  std::vector<SourceBundle> s;
  auto add = [&](const char* id, auto fn) {
    s.push_back({id, Base::F1, degree_of(atlas, id), 0, true, fn});
  };
  add("3-24", [](Int) {
    return std::vector<SourceCandidate>{{f1(1, 0), 2, 0, "section"}};
  });
  // the P1xP1 parameters of 3-28 without the fibre case
  add("3-28", [](Int cap) {
    std::vector<SourceCandidate> v;
    for (Int d2 = 0; d2 <= cap; ++d2) {
      v.push_back({f1(1, 0), 3 + 2 * d2, 0, "disjoint d2=" + std::to_string(d2)});
      if (d2 >= 1 && 2 * d2 <= cap)
        v.push_back({f1(2 * d2, 0), 8 * d2, plane_genus(2 * d2), "disjoint d2=" + std::to_string(d2)});
      v.push_back({f1(0, 1), 1 + 2 * d2, 0, "gamma d2=" + std::to_string(d2)});
    }
    return v;
  });
  // pulled back from the 2-35 space over P2, plus centres over the (-1)-curve
  add("3-30", [](Int cap) {
    std::vector<SourceCandidate> v{{f1(1, 0), 2, 0, "u=-1"}};
    for (Int d = 1; d <= cap; ++d)
      for (Int u = 0; u <= 1; ++u)
        v.push_back({f1(d, 0), 4 * d + 2 * u, plane_genus(d), "u=" + std::to_string(u)});
    for (Int a = 0; a <= cap; ++a) v.push_back({f1(0, 1), 2 * a + 1, 0, "gamma a=" + std::to_string(a)});
    return v;
  });
  return s;
}

std::vector<TransformRow> enumerate_F1_rho4(Int cap, const Atlas& atlas) {
  Stage st;
  st.rho_x = 4;
  for (const auto& r : enumerate_F1_rho3(atlas)) st.targets.push_back(r.x);
  return run(f1_rho4_sources(atlas), st, cap, atlas);
}

// ---------------------------------------------------------------- fibre blowups

std::vector<FibreBlowupRow> enumerate_fibre_blowups_rho4(Int cap, const Atlas& atlas) {
  std::vector<FibreBlowupRow> out;
  std::map<std::string, std::string> over_p2;  // F1 conic bundle -> the P2 one it comes from
  for (const auto& r : enumerate_F1_rho3(atlas)) over_p2[r.x] = r.x_prime;
  auto partner = [&](const std::string& id) {
    auto it = over_p2.find(id);
    return it == over_p2.end() ? id : it->second;
  };

  auto p2rows = enumerate_P2(cap, atlas);
  for (const auto& row : enumerate_F1_rho4(cap, atlas)) {
    if (row.curve.coords[1] != 0) continue;  // centres over the (-1)-curve are not fibre products
    std::string a = partner(row.y), b = row.yp_fano() ? partner(row.yp) : std::string(kNonFano);
    for (const auto& t : p2rows) {
      bool same = (t.y == a && t.yp == b) || (t.y == b && t.yp == a);
      if (!same || t.degX != row.degX + 6 || t.x_candidates.size() != 1) continue;
      out.push_back({row.x_candidates, t.x_candidates.front(), row.degX, t.degX, Base::P2,
                     t.curve.coords[0]});
    }
  }

  // trivial bundles S x P1 -> S: a fibre blowup gives (Bl_pt S) x P1
  const std::pair<Base, const char*> products[] = {{Base::P1xP1, "P1xP1xP1"}, {Base::F1, "F1xP1"}};
  for (const auto& [base, seed] : products) {
    const FanoRecord* xt = nullptr;
    for (const auto& r : atlas.records())
      if (r.rho == 3 && r.seed && *r.seed == seed) xt = &r;
    if (!xt) continue;
    Int degX = xt->degree - 6;
    IdentifyHints h;
    h.edges.push_back({xt->id, 0, 2, EdgeKind::Curve});
    out.push_back({atlas.identify(4, degX, h), xt->id, degX, xt->degree, base, std::nullopt});
  }
  std::sort(out.begin(), out.end(), [](const FibreBlowupRow& a, const FibreBlowupRow& b) {
    std::string xa = a.x_candidates.empty() ? "" : a.x_candidates.front();
    std::string xb = b.x_candidates.empty() ? "" : b.x_candidates.front();
    if (xa != xb) return id_less(xa, xb);
    return id_less(a.x_tilde, b.x_tilde);
  });
  return out;
}

// ---------------------------------------------------------------- rho 5

std::vector<Rho5Row> enumerate_rho5(Int cap, const Atlas& atlas) {
  auto rows = enumerate_F1_rho4(cap, atlas);
  // X from the F1 table with an ample discriminant over P1xP1 cannot be blown up further
  auto usable = [&](const TransformRow& r) {
    if (r.x_candidates.size() != 1) return false;
    for (const auto& c : atlas.lookup(r.x_candidates.front()).all_conic_bundles())
      if (c.base == Base::P1xP1 && c.delta.coords[0] > 0 && c.delta.coords[1] > 0) return false;
    return true;
  };
  auto is_gamma = [](const TransformRow& r) { return r.curve.coords[1] != 0; };

  std::vector<Rho5Row> out;
  std::set<std::tuple<std::string, std::string, std::string>> seen;
  for (const auto& g : rows) {
    if (!usable(g) || !is_gamma(g)) continue;
    for (const auto& t : rows) {
      if (!usable(t) || is_gamma(t)) continue;
      for (const std::string& z : {t.y, t.yp}) {
        if (z == kNonFano || (z != g.y && z != g.yp)) continue;
        const std::string& y = t.x_candidates.front();
        const std::string& yp = g.x_candidates.front();
        if (!seen.insert({y, yp, z}).second) continue;
        Int degX = degree_of(atlas, y) + degree_of(atlas, yp) - degree_of(atlas, z);
        IdentifyHints h;
        h.blowdowns = {y, yp};
        out.push_back({atlas.identify(5, degX, h), y, yp, z, degX});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Rho5Row& a, const Rho5Row& b) {
    if (a.degX != b.degX) return a.degX < b.degX;
    if (a.y != b.y) return id_less(a.y, b.y);
    return id_less(a.yp, b.yp);
  });
  return out;
}

// ---------------------------------------------------------------- disjoint pairs

std::vector<DisjointPairRow> enumerate_disjoint_pairs(const std::string& V, const Atlas& atlas) {
  const FanoRecord& v = atlas.lookup(V);
  struct Side {
    const FanoRecord* rec;
    Int mu;  // length of the del Pezzo fibration ray
  };
  // rho 2 families with one D ray and one E1 ray onto V
  std::vector<Side> sides;
  for (const FanoRecord* r : atlas.list(RecordFilter{2, {}, {}, {}})) {
    const ExtremalRayDesc* d = nullptr;
    const ExtremalRayDesc* e = nullptr;
    for (const auto& x : r->rays) {
      if (x.type == RayType::D1 || x.type == RayType::D2 || x.type == RayType::D3) d = &x;
      if (x.type == RayType::E1) e = &x;
    }
    if (!d || !e || atlas.resolve(e->target) != v.id) continue;
    Int mu = d->type == RayType::D1 ? 1 : d->type == RayType::D2 ? 2 : 3;
    sides.push_back({r, mu});
  }

  std::vector<DisjointPairRow> out;
  for (std::size_t i = 0; i < sides.size(); ++i)
    for (std::size_t j = 0; j < sides.size(); ++j) {
      const Side& a = sides[i];
      const Side& b = sides[j];
      if (a.rec->degree < b.rec->degree) continue;
      if (a.rec->degree == b.rec->degree && j < i) continue;
      if (!mu_sum_filter(a.mu, b.mu, v.index)) continue;
      Int gap1 = v.degree - a.rec->degree, gap2 = v.degree - b.rec->degree;
      Int degX = v.degree - gap1 - gap2;
      if (degX <= 0) continue;

      DisjointPairRow row;
      row.y1 = a.rec->id;
      row.y2 = b.rec->id;
      row.degX = degX;
      IdentifyHints h;
      h.blowdowns = {row.y1, row.y2};
      row.x_candidates = atlas.identify(3, degX, h);
      if (row.x_candidates.size() == 1) {
        std::optional<Int> k10, k01;
        for (const auto& c : atlas.lookup(row.x_candidates.front()).all_conic_bundles()) {
          if (c.base != Base::P1xP1) continue;
          for (const auto& k : c.k2) {
            if (k.divisor.coords == std::vector<Int>{1, 0}) k10 = k.value;
            if (k.divisor.coords == std::vector<Int>{0, 1}) k01 = k.value;
          }
        }
        if (k10 && k01) {
          const SurfaceClass r10 = p1p1(1, 0), r01 = p1p1(0, 1);
          row.delta = p1p1(discriminant_degree(*k01, k_dot(r01)), discriminant_degree(*k10, k_dot(r10)));
        }
      }
      out.push_back(std::move(row));
    }
  std::sort(out.begin(), out.end(),
            [](const DisjointPairRow& a, const DisjointPairRow& b) { return a.degX > b.degX; });
  return out;
}

// ---------------------------------------------------------------- cross-check

VerifyReport crosscheck_conic_bundles(const Atlas& atlas) {
  VerifyReport rep;
  auto put = [&](const std::string& id, const std::string& check, bool ok, const std::string& d) {
    rep.entries.push_back({id, check, ok, false, d});
  };

  std::map<Base, std::vector<TransformRow>> rows;
  rows[Base::P2] = enumerate_P2(kDefaultCap, atlas);
  rows[Base::P1xP1] = enumerate_P1P1_rho4(kDefaultCap, atlas);
  rows[Base::F1] = enumerate_F1_rho4(kDefaultCap, atlas);

  for (const auto& [base, list] : rows)
    for (const auto& r : list) {
      std::string what = r.y + " vs " + r.yp + " over " + to_string(base);
      bool one = r.x_candidates.size() == 1;
      put(one ? r.x_candidates.front() : "?", "row_identified", one, what);
      put(one ? r.x_candidates.front() : "?", "row_double_k",
          double_k_check(r.degX, r.degY, r.degYp, r.kYB, r.kYpBp, r.pa) || !r.yp_fano(), what);
    }

  for (const auto& rec : atlas.records()) {
    if (rec.rho < 3) continue;
    for (const auto& c : rec.all_conic_bundles()) {
      if (c.pair.size() != 2) continue;
      std::string what = c.pair[0] + " vs " + c.pair[1] + " over " + to_string(c.base) + " " +
                         describe(c.delta);
      bool found = false;
      for (const auto& r : rows[c.base]) {
        bool x = std::find(r.x_candidates.begin(), r.x_candidates.end(), rec.id) != r.x_candidates.end();
        if (x && r.y == c.pair[0] && r.yp == c.pair[1] && r.curve == c.delta) found = true;
      }
      put(rec.id, "conic_pair", found, what);
    }
  }

  for (const auto& r : enumerate_F1_rho3(atlas)) {
    bool ok = false;
    if (const FanoRecord* x = atlas.find(r.x))
      for (const auto& c : x->all_conic_bundles())
        ok = ok || (c.base == Base::F1 && c.delta == f1(r.delta_degree, 0));
    put(r.x.empty() ? "?" : r.x, "f1_bundle", ok, "from " + r.x_prime);
  }

  for (const auto& r : enumerate_disjoint_pairs("P3", atlas)) {
    bool ok = r.x_candidates.size() == 1 && r.delta;
    if (ok) {
      ok = false;
      for (const auto& c : atlas.lookup(r.x_candidates.front()).all_conic_bundles())
        ok = ok || (c.base == Base::P1xP1 && c.delta == *r.delta);
    }
    put(r.x_candidates.empty() ? "?" : r.x_candidates.front(), "disjoint_delta", ok, r.y1 + "+" + r.y2);
  }
  return rep;
}

}  // namespace fano
