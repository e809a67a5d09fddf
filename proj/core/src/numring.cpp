#include "fano/numring.hpp"

#include <algorithm>
#include <utility>

#include "json.hpp"

namespace fano {

namespace {

void require_same(const NumRing& ring, const DivisorClass& d, const char* what) {
  if (static_cast<int>(d.size()) != ring.rank()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": class has " + std::to_string(d.size()) +
                    " coordinates, ring " + ring.name() + " has rank " +
                    std::to_string(ring.rank()));
  }
}

Triple sorted(int i, int j, int k) {
  Triple t{i, j, k};
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::DimensionMismatch, "adding classes of different rank");
  DivisorClass r{a.coords};
  for (std::size_t i = 0; i < r.size(); ++i) r.coords[i] = add(r.coords[i], b.coords[i]);
  return r;
}

DivisorClass operator-(const DivisorClass& a) {
  DivisorClass r{a.coords};
  for (auto& x : r.coords) x = neg(x);
  return r;
}

DivisorClass operator*(Int k, const DivisorClass& a) {
  DivisorClass r{a.coords};
  for (auto& x : r.coords) x = mul(k, x);
  return r;
}

NumRing::NumRing(std::string name, std::vector<std::string> basis,
                 std::map<Triple, Int> form, DivisorClass canonical)
    : name_(std::move(name)), basis_(std::move(basis)), canonical_(std::move(canonical)) {
  const int n = rank();
  if (n <= 0) throw Error(ErrorCode::InvalidArgument, "ring needs a nonempty basis");
  require_same(*this, canonical_, "canonical class");
  for (const auto& [key, val] : form) {
    Triple s = sorted(key[0], key[1], key[2]);
    if (s[0] < 0 || s[2] >= n)
      throw Error(ErrorCode::DimensionMismatch, "monomial index out of range in " + name_);
    if (val == 0) continue;
    auto [it, fresh] = form_.emplace(s, val);
    if (!fresh && it->second != val)
      throw Error(ErrorCode::InvalidArgument, "conflicting monomial values in " + name_);
  }
}

Int NumRing::monomial(int i, int j, int k) const {
  auto it = form_.find(sorted(i, j, k));
  return it == form_.end() ? 0 : it->second;
}

DivisorClass NumRing::basis_class(int i) const {
  DivisorClass d = zero();
  d.coords.at(static_cast<std::size_t>(i)) = 1;
  return d;
}

DivisorClass NumRing::zero() const {
  return DivisorClass{std::vector<Int>(basis_.size(), 0)};
}

Int triple(const NumRing& ring, const DivisorClass& a, const DivisorClass& b,
           const DivisorClass& c) {
  require_same(ring, a, "triple");
  require_same(ring, b, "triple");
  require_same(ring, c, "triple");
  Int total = 0;
  // each stored monomial stands for all its distinct orderings
  for (const auto& [key, val] : ring.form()) {
    Triple p = key;
    Int s = 0;
    do {
      Int t = mul(mul(a.coords[p[0]], b.coords[p[1]]), c.coords[p[2]]);
      s = add(s, t);
    } while (std::next_permutation(p.begin(), p.end()));
    total = add(total, mul(val, s));
  }
  return total;
}

Int anticanonical_degree(const NumRing& ring) {
  DivisorClass m = ring.anticanonical();
  return triple(ring, m, m, m);
}

Int k2_dot(const NumRing& ring, const DivisorClass& d) {
  DivisorClass m = ring.anticanonical();
  return triple(ring, m, m, d);
}

Int k_dot_sq(const NumRing& ring, const DivisorClass& d) {
  return triple(ring, ring.anticanonical(), d, d);
}

Int anticanonical_on_curve(const NumRing& ring, const CurveData& c) {
  if (static_cast<int>(c.dot.size()) != ring.rank())
    throw Error(ErrorCode::DimensionMismatch, "curve dot vector does not match ring rank");
  Int s = 0;
  for (int i = 0; i < ring.rank(); ++i) s = sub(s, mul(ring.canonical().coords[i], c.dot[i]));
  return s;
}

NumRing blowup_ring(const NumRing& ring, const CurveData& center) {
  const Int kc = anticanonical_on_curve(ring, center);
  const int n = ring.rank();
  const int e = n;

  std::map<Triple, Int> form = ring.form();
  // pullback . pullback . E vanishes, so only E^2 and E^3 terms are new
  for (int i = 0; i < n; ++i) {
    if (center.dot[i] != 0) form[Triple{i, e, e}] = neg(center.dot[i]);
  }
  // E^3 = -deg N, deg N = -K.C + 2pa - 2
  Int deg_n = sub(add(kc, mul(2, center.pa)), 2);
  if (deg_n != 0) form[Triple{e, e, e}] = neg(deg_n);

  std::vector<std::string> basis = ring.basis();
  basis.push_back("E" + std::to_string(n));
  DivisorClass k = ring.canonical();
  k.coords.push_back(1);
  return NumRing("Bl(" + ring.name() + ")", std::move(basis), std::move(form), std::move(k));
}

namespace {

NumRing rank_one(const std::string& name, Int cube, Int index) {
  return NumRing(name, {"H"}, {{Triple{0, 0, 0}, cube}}, DivisorClass{{neg(index)}});
}

// P(O + O(c)) over a base surface: xi^2 = xi * c, base classes cube to zero
NumRing projective_bundle(const std::string& name, std::vector<std::string> base_basis,
                          const std::vector<std::vector<Int>>& base_pairing,
                          const std::vector<Int>& c1, const std::vector<Int>& base_k) {
  const int b = static_cast<int>(base_basis.size());
  std::vector<std::string> basis{"xi"};
  for (auto& s : base_basis) basis.push_back(s);
  std::map<Triple, Int> form;
  // xi . a . b' = (a.b') on the base
  for (int i = 0; i < b; ++i)
    for (int j = i; j < b; ++j)
      if (base_pairing[i][j] != 0) form[Triple{0, i + 1, j + 1}] = base_pairing[i][j];
  // xi^2 . a = xi . c . a
  std::vector<Int> xi2(b, 0);
  for (int i = 0; i < b; ++i) {
    for (int j = 0; j < b; ++j) xi2[i] = add(xi2[i], mul(c1[j], base_pairing[j][i]));
    if (xi2[i] != 0) form[Triple{0, 0, i + 1}] = xi2[i];
  }
  // xi^3 = xi^2 . c
  Int top = 0;
  for (int j = 0; j < b; ++j) top = add(top, mul(c1[j], xi2[j]));
  if (top != 0) form[Triple{0, 0, 0}] = top;
  // K = -2 xi + (K_S + c)
  DivisorClass k{{-2}};
  for (int j = 0; j < b; ++j) k.coords.push_back(add(base_k[j], c1[j]));
  return NumRing(name, std::move(basis), std::move(form), std::move(k));
}

std::string canonical_seed_name(std::string_view raw) {
  std::string s(raw);
  // accept the direct-sum sign as well as '+'
  const std::string oplus = "\xe2\x8a\x95";
  for (auto pos = s.find(oplus); pos != std::string::npos; pos = s.find(oplus))
    s.replace(pos, oplus.size(), "+");
  if (s == "P(O+O(1))/P2") return "V7";
  return s;
}

}  // namespace

std::vector<std::string> seed_names() {
  std::vector<std::string> out{"P3", "Q"};
  for (int d = 1; d <= 5; ++d) out.push_back("V" + std::to_string(d));
  for (int g = 2; g <= 12; ++g) out.push_back("X" + std::to_string(2 * g - 2));
  for (const char* s : {"P2xP1", "P1xP1xP1", "F1xP1", "W", "V7", "P(O+O(2))/P2",
                        "P(O+O(1,1))/P1xP1"})
    out.emplace_back(s);
  return out;
}

NumRing seed_space(std::string_view raw) {
  const std::string name = canonical_seed_name(raw);
  if (name == "P3") return rank_one(name, 1, 4);
  if (name == "Q") return rank_one(name, 2, 3);
  if (name.size() == 2 && name[0] == 'V' && name[1] >= '1' && name[1] <= '5')
    return rank_one(name, name[1] - '0', 2);
  if (name.size() >= 2 && name[0] == 'X') {
    try {
      std::size_t used = 0;
      int deg = std::stoi(name.substr(1), &used);
      if (used == name.size() - 1 && deg >= 2 && deg <= 22 && deg % 2 == 0)
        return rank_one(name, deg, 1);
    } catch (const std::exception&) {
    }
  }
  if (name == "P2xP1")
    return NumRing(name, {"h", "p"}, {{Triple{0, 0, 1}, 1}}, DivisorClass{{-3, -2}});
  if (name == "P1xP1xP1")
    return NumRing(name, {"h1", "h2", "h3"}, {{Triple{0, 1, 2}, 1}},
                   DivisorClass{{-2, -2, -2}});
  if (name == "F1xP1")
    // basis: pullback of a line, the (-1)-curve, a point of the second factor
    return NumRing(name, {"l", "e", "p"}, {{Triple{0, 0, 2}, 1}, {Triple{1, 1, 2}, -1}},
                   DivisorClass{{-3, 1, -2}});
  if (name == "W")
    return NumRing(name, {"h1", "h2"}, {{Triple{0, 0, 1}, 1}, {Triple{0, 1, 1}, 1}},
                   DivisorClass{{-2, -2}});
  if (name == "V7") return projective_bundle(name, {"h"}, {{1}}, {1}, {-3});
  if (name == "P(O+O(2))/P2") return projective_bundle(name, {"h"}, {{1}}, {2}, {-3});
  if (name == "P(O+O(1,1))/P1xP1")
    return projective_bundle(name, {"a", "b"}, {{0, 1}, {1, 0}}, {1, 1}, {-2, -2});
  throw Error(ErrorCode::UnknownSeed, "unknown seed space: " + std::string(raw));
}

std::string ring_to_json(const NumRing& ring) {
  nlohmann::ordered_json j;
  j["name"] = ring.name();
  j["rank"] = ring.rank();
  j["basis"] = ring.basis();
  auto mons = nlohmann::ordered_json::array();
  for (const auto& [key, val] : ring.form()) {
    nlohmann::ordered_json m;
    m["idx"] = {key[0], key[1], key[2]};
    m["val"] = val;
    mons.push_back(std::move(m));
  }
  j["monomials"] = std::move(mons);
  j["canonical"] = ring.canonical().coords;
  j["degree"] = anticanonical_degree(ring);
  return j.dump(2);
}

}  // namespace fano
