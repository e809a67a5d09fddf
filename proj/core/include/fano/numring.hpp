#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fano/checked.hpp"

namespace fano {

// Coordinates of a divisor class in the basis of its ring.
struct DivisorClass {
  std::vector<Int> coords;

  std::size_t size() const { return coords.size(); }
  bool operator==(const DivisorClass&) const = default;
};

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a);
DivisorClass operator*(Int k, const DivisorClass& a);

// Numerical data of a blowup centre: genus and dot products with the basis.
struct CurveData {
  Int pa = 0;
  std::vector<Int> dot;
};

using Triple = std::array<int, 3>;  // always sorted i <= j <= k

// Divisor-level intersection ring of a smooth threefold.
// Immutable once built; the form lives on sorted index triples only.
class NumRing {
 public:
  NumRing() = default;
  NumRing(std::string name, std::vector<std::string> basis,
          std::map<Triple, Int> form, DivisorClass canonical);

  const std::string& name() const { return name_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  const std::vector<std::string>& basis() const { return basis_; }
  const std::map<Triple, Int>& form() const { return form_; }
  const DivisorClass& canonical() const { return canonical_; }
  DivisorClass anticanonical() const { return -canonical_; }

  // stored value on a monomial, indices in any order
  Int monomial(int i, int j, int k) const;
  DivisorClass basis_class(int i) const;
  DivisorClass zero() const;

 private:
  std::string name_;
  std::vector<std::string> basis_;
  std::map<Triple, Int> form_;
  DivisorClass canonical_;
};

Int triple(const NumRing& ring, const DivisorClass& a, const DivisorClass& b,
           const DivisorClass& c);
Int anticanonical_degree(const NumRing& ring);

// (-K)^2 . D and (-K) . D . D, handy for checks on exceptional divisors
Int k2_dot(const NumRing& ring, const DivisorClass& d);
Int k_dot_sq(const NumRing& ring, const DivisorClass& d);

// -K . C for a curve given by its dot vector
Int anticanonical_on_curve(const NumRing& ring, const CurveData& c);

NumRing blowup_ring(const NumRing& ring, const CurveData& center);

// seed catalog
std::vector<std::string> seed_names();
NumRing seed_space(std::string_view name);

// {rank, basis, monomials:[{idx, val}], canonical}
std::string ring_to_json(const NumRing& ring);

}  // namespace fano
