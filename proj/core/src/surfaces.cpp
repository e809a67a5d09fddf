#include "fano/surfaces.hpp"

#include <sstream>

namespace fano {

const char* to_string(Base b) {
  switch (b) {
    case Base::P2: return "P2";
    case Base::P1xP1: return "P1xP1";
    case Base::F1: return "F1";
  }
  return "?";
}

std::optional<Base> parse_base(std::string_view s) {
  if (s == "P2") return Base::P2;
  if (s == "P1xP1") return Base::P1xP1;
  if (s == "F1") return Base::F1;
  return std::nullopt;
}

int base_rank(Base b) { return b == Base::P2 ? 1 : 2; }

SurfaceClass make_class(Base b, std::vector<Int> coords) {
  if (static_cast<int>(coords.size()) != base_rank(b))
    throw Error(ErrorCode::DimensionMismatch,
                std::string("wrong number of coordinates for a class on ") + to_string(b));
  return SurfaceClass{b, std::move(coords)};
}

SurfaceClass p2(Int d) { return SurfaceClass{Base::P2, {d}}; }
SurfaceClass p1p1(Int d1, Int d2) { return SurfaceClass{Base::P1xP1, {d1, d2}}; }
SurfaceClass f1(Int a, Int b) { return SurfaceClass{Base::F1, {a, b}}; }

SurfaceClass canonical_class(Base b) {
  switch (b) {
    case Base::P2: return p2(-3);
    case Base::P1xP1: return p1p1(-2, -2);
    case Base::F1: return f1(-3, 1);
  }
  return p2(0);
}

Int pairing(const SurfaceClass& x, const SurfaceClass& y) {
  if (x.base != y.base) throw Error(ErrorCode::BaseMismatch, "classes live on different surfaces");
  if (static_cast<int>(x.coords.size()) != base_rank(x.base) ||
      static_cast<int>(y.coords.size()) != base_rank(y.base))
    throw Error(ErrorCode::DimensionMismatch, "malformed surface class");
  const auto& a = x.coords;
  const auto& b = y.coords;
  switch (x.base) {
    case Base::P2: return mul(a[0], b[0]);
    case Base::P1xP1: return add(mul(a[0], b[1]), mul(a[1], b[0]));
    case Base::F1: return sub(mul(a[0], b[0]), mul(a[1], b[1]));
  }
  return 0;
}

Int self_int(const SurfaceClass& c) { return pairing(c, c); }

Int k_dot(const SurfaceClass& c) { return pairing(canonical_class(c.base), c); }

Int genus(const SurfaceClass& c) {
  Int twice = add(self_int(c), k_dot(c));
  if (twice % 2 != 0)
    throw Error(ErrorCode::HalfIntegerGenus, "adjunction gave a half-integer genus for " + describe(c));
  return add(1, twice / 2);
}

std::vector<SurfaceClass> enumerate_classes(
    Base b, Int cap, const std::function<bool(const SurfaceClass&)>& predicate) {
  std::vector<SurfaceClass> out;
  auto offer = [&](SurfaceClass c) {
    Int deg = neg(k_dot(c));
    if (deg <= 0 || deg > cap) return;
    if (predicate && !predicate(c)) return;
    out.push_back(std::move(c));
  };
  if (cap <= 0) return out;
  switch (b) {
    case Base::P2:
      for (Int d = 0; 3 * d <= cap; ++d) offer(p2(d));
      break;
    case Base::P1xP1:
      for (Int d1 = 0; 2 * d1 <= cap; ++d1)
        for (Int d2 = 0; 2 * (d1 + d2) <= cap; ++d2) offer(p1p1(d1, d2));
      break;
    case Base::F1:
      // pullbacks of plane curves, plus the (-1)-curve itself
      offer(f1(0, 1));
      for (Int a = 1; 3 * a <= cap; ++a) offer(f1(a, 0));
      break;
  }
  return out;
}

std::string describe(const SurfaceClass& c) {
  std::ostringstream os;
  if (c.base == Base::F1 && c.coords.size() == 2) {
    Int a = c.coords[0], g = c.coords[1];
    if (a != 0) os << "tau*O(" << a << ")";
    if (g != 0) {
      if (a != 0) os << (g > 0 ? "+" : "-");
      else if (g < 0) os << "-";
      if (g != 1 && g != -1) os << (g < 0 ? -g : g);
      os << "Gamma";
    }
    if (a == 0 && g == 0) os << "0";
    return os.str();
  }
  os << "(";
  for (std::size_t i = 0; i < c.coords.size(); ++i) os << (i ? "," : "") << c.coords[i];
  os << ")";
  return os.str();
}

}  // namespace fano
