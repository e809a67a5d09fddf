#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fano/numring.hpp"
#include "fano/surfaces.hpp"

namespace fano {

enum class RayType { C1, C2, D1, D2, D3, E1, E2, E3_or_E4, E5 };

const char* to_string(RayType t);
std::optional<RayType> parse_ray_type(std::string_view s);

inline constexpr const char* kNonFano = "non-Fano";
inline constexpr const char* kSingular = "singular";

struct ExtremalRayDesc {
  RayType type = RayType::C2;
  std::string target;            // record id, alias, "P2", "P1", "non-Fano", "singular"
  int count = 1;                 // identical rays listed once
  std::optional<SurfaceClass> delta;  // C1 / C2: discriminant class on the base
  std::optional<Int> k2_fiber;   // D types: (-K)^2 . fibre
  std::optional<Int> pa;         // E1
  std::optional<Int> kC;         // E1

  bool operator==(const ExtremalRayDesc&) const = default;
};

// (-K_X)^2 . f^*D for a divisor D on the base
struct FibreDegree {
  SurfaceClass divisor;
  Int value = 0;

  bool operator==(const FibreDegree&) const = default;
};

struct ConicBundle {
  Base base = Base::P2;
  SurfaceClass delta;
  int count = 1;
  std::vector<std::string> pair;  // Y, Y' of the elementary transform, when known
  std::vector<FibreDegree> k2;
  std::string note;

  bool operator==(const ConicBundle&) const = default;
};

enum class EdgeKind { Curve, Fibre };

// X is the blowup of `target` along a smooth curve with these invariants
struct BlowdownEdge {
  std::string target;
  Int pa = 0;
  Int kC = 0;
  EdgeKind kind = EdgeKind::Curve;

  bool operator==(const BlowdownEdge&) const = default;
};

struct FanoRecord {
  std::string id;
  int rho = 0;
  int number = 0;
  int index = 1;
  Int degree = 0;
  std::optional<int> genus;
  std::vector<std::string> aliases;
  std::optional<std::string> seed;
  std::string description;
  std::vector<ExtremalRayDesc> rays;
  std::vector<ConicBundle> conic_bundles;  // beyond those implied by C-type rays
  std::vector<BlowdownEdge> blowdowns;     // beyond those implied by E1 rays
  std::vector<std::string> blowups;        // listed blowups, not necessarily complete
  std::set<std::string> flags;
  std::string source;

  bool operator==(const FanoRecord&) const = default;

  bool has_flag(std::string_view f) const { return flags.count(std::string(f)) > 0; }
  // E1 rays with a Fano target plus the explicit edges
  std::vector<BlowdownEdge> all_blowdowns() const;
  // C rays (as conic bundles over P2) plus the explicit entries
  std::vector<ConicBundle> all_conic_bundles() const;
};

std::string record_to_json(const FanoRecord& r, int indent = 2);
FanoRecord record_from_json(std::string_view text);

struct IdentifyHints {
  std::vector<RayType> ray_types;
  std::vector<Base> conic_bases;
  std::vector<std::string> blowdowns;  // ids that must appear as blowdown targets
  std::vector<BlowdownEdge> edges;     // exact (target, pa, kC) edges that must exist
  // conic bundle over base with this transform pair (order ignored)
  std::optional<std::pair<Base, std::pair<std::string, std::string>>> transform_pair;
};

struct RecordFilter {
  std::optional<int> rho;
  std::optional<Int> degree;
  std::optional<RayType> has_ray;
  std::optional<std::string> flag;
};

struct GraphEdge {
  std::string from;
  std::string to;
  BlowdownEdge curve;
};

struct VerifyEntry {
  std::string id;
  std::string check;
  bool pass = false;
  bool whitelisted = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyEntry> entries;

  std::size_t failures() const;  // failing and not whitelisted
  bool ok() const { return failures() == 0; }
};

struct Discrepancy {
  std::string id;
  std::string check;
  std::string printed;
  std::string used;
  std::string reason;
};

class Atlas {
 public:
  static Atlas from_json(std::string_view text);

  const std::vector<FanoRecord>& records() const { return records_; }

  // id or alias ("P3", "W", ...); throws NotFound
  const FanoRecord& lookup(std::string_view id) const;
  const FanoRecord* find(std::string_view id) const;
  std::string resolve(std::string_view id_or_alias) const;

  std::vector<const FanoRecord*> list(const RecordFilter& f = {}) const;
  std::vector<const FanoRecord*> list(const std::function<bool(const FanoRecord&)>& pred) const;
  std::vector<std::string> identify(int rho, Int degree, const IdentifyHints& hints = {}) const;

  std::vector<GraphEdge> blowdown_graph() const;
  std::string graph_dot() const;

  VerifyReport verify(std::string_view id) const;
  VerifyReport verify_all() const;

  void set_discrepancies(std::vector<Discrepancy> d) { discrepancies_ = std::move(d); }
  const std::vector<Discrepancy>& discrepancies() const { return discrepancies_; }

 private:
  void verify_record(const FanoRecord& r, VerifyReport& rep) const;
  void verify_global(VerifyReport& rep) const;
  void add(VerifyReport& rep, const std::string& id, const std::string& check, bool pass,
           const std::string& detail) const;

  std::vector<FanoRecord> records_;
  std::vector<Discrepancy> discrepancies_;
};

// the database compiled into the library
const Atlas& default_atlas();
std::string_view atlas_json_text();
std::vector<Discrepancy> parse_discrepancies(std::string_view text);

// "3-27" < "3-28" < "4-1", numeric per part
bool id_less(std::string_view a, std::string_view b);

}  // namespace fano
