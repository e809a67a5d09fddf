#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fano/checked.hpp"

namespace fano {

enum class Base { P2, P1xP1, F1 };

const char* to_string(Base b);
std::optional<Base> parse_base(std::string_view s);
int base_rank(Base b);

// P2: (d) in the line basis. P1xP1: (d1, d2) in the ruling basis.
// F1: (a, b) meaning a * (pullback of a line) + b * (the (-1)-curve).
struct SurfaceClass {
  Base base = Base::P2;
  std::vector<Int> coords;

  bool operator==(const SurfaceClass&) const = default;
};

SurfaceClass make_class(Base b, std::vector<Int> coords);
SurfaceClass p2(Int d);
SurfaceClass p1p1(Int d1, Int d2);
SurfaceClass f1(Int a, Int b);

SurfaceClass canonical_class(Base b);
Int pairing(const SurfaceClass& x, const SurfaceClass& y);
Int self_int(const SurfaceClass& c);
Int k_dot(const SurfaceClass& c);  // K_S . c, not -K_S . c
Int genus(const SurfaceClass& c);

// nonnegative classes with 0 < -K.c <= cap, lexicographic
std::vector<SurfaceClass> enumerate_classes(
    Base b, Int degree_cap,
    const std::function<bool(const SurfaceClass&)>& predicate = nullptr);

// "(2)", "(1,2)", "tau*O(1)", "Gamma", "tau*O(2)+Gamma"
std::string describe(const SurfaceClass& c);

}  // namespace fano
