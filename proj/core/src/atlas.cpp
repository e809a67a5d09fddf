#include "fano/atlas.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "fano/blowupcalc.hpp"
#include "fano/eltransform.hpp"
#include "json.hpp"

namespace fano {

namespace detail {
std::string_view embedded_atlas_json();
std::string_view embedded_discrepancies_json();
}  // namespace detail

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kRayNames[] = {"C1", "C2", "D1", "D2", "D3", "E1", "E2", "E3_or_E4", "E5"};

bool is_conic(RayType t) { return t == RayType::C1 || t == RayType::C2; }
bool is_dp(RayType t) { return t == RayType::D1 || t == RayType::D2 || t == RayType::D3; }

[[noreturn]] void parse_fail(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  auto it = j.find(key);
  return it == j.end() ? fallback : it->template get<T>();
}

Base base_of(const json& j, Base fallback = Base::P2) {
  auto it = j.find("base");
  if (it == j.end()) return fallback;
  auto b = parse_base(it->get<std::string>());
  if (!b) parse_fail("unknown base " + it->get<std::string>());
  return *b;
}

SurfaceClass class_of(Base b, const json& j) {
  return make_class(b, j.get<std::vector<Int>>());
}

json ray_json(const ExtremalRayDesc& r) {
  json j;
  j["type"] = to_string(r.type);
  if (is_conic(r.type)) {
    j["base"] = to_string(r.delta ? r.delta->base : Base::P2);
    if (r.type == RayType::C1 && r.delta) j["delta"] = r.delta->coords;
  } else {
    j["target"] = r.target;
  }
  if (r.k2_fiber) j["k2_fiber"] = *r.k2_fiber;
  if (r.pa) j["pa"] = *r.pa;
  if (r.kC) j["kC"] = *r.kC;
  if (r.count != 1) j["count"] = r.count;
  return j;
}

ExtremalRayDesc ray_from(const json& j) {
  ExtremalRayDesc r;
  auto t = parse_ray_type(j.at("type").get<std::string>());
  if (!t) parse_fail("unknown ray type " + j.at("type").get<std::string>());
  r.type = *t;
  r.count = get_or<int>(j, "count", 1);
  if (is_conic(r.type)) {
    Base b = base_of(j);
    r.target = to_string(b);
    if (j.contains("delta"))
      r.delta = class_of(b, j["delta"]);
    else
      r.delta = make_class(b, std::vector<Int>(static_cast<std::size_t>(base_rank(b)), 0));
  } else {
    r.target = get_or<std::string>(j, "target", kSingular);
  }
  if (j.contains("k2_fiber")) r.k2_fiber = j["k2_fiber"].get<Int>();
  if (j.contains("pa")) r.pa = j["pa"].get<Int>();
  if (j.contains("kC")) r.kC = j["kC"].get<Int>();
  return r;
}

json bundle_json(const ConicBundle& c) {
  json j;
  j["base"] = to_string(c.base);
  j["delta"] = c.delta.coords;
  if (c.count != 1) j["count"] = c.count;
  if (!c.pair.empty()) j["pair"] = c.pair;
  if (!c.k2.empty()) {
    json arr = json::array();
    for (const auto& k : c.k2) arr.push_back(json{{"divisor", k.divisor.coords}, {"value", k.value}});
    j["k2"] = arr;
  }
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

ConicBundle bundle_from(const json& j) {
  ConicBundle c;
  c.base = base_of(j);
  c.delta = class_of(c.base, j.at("delta"));
  c.count = get_or<int>(j, "count", 1);
  c.pair = get_or<std::vector<std::string>>(j, "pair", {});
  if (j.contains("k2"))
    for (const auto& k : j["k2"])
      c.k2.push_back({class_of(c.base, k.at("divisor")), k.at("value").get<Int>()});
  c.note = get_or<std::string>(j, "note", "");
  return c;
}

json edge_json(const BlowdownEdge& e) {
  json j{{"target", e.target}, {"pa", e.pa}, {"kC", e.kC}};
  if (e.kind == EdgeKind::Fibre) j["kind"] = "fibre";
  return j;
}

BlowdownEdge edge_from(const json& j) {
  BlowdownEdge e;
  e.target = j.at("target").get<std::string>();
  e.pa = j.at("pa").get<Int>();
  e.kC = j.at("kC").get<Int>();
  std::string kind = get_or<std::string>(j, "kind", "curve");
  if (kind == "fibre")
    e.kind = EdgeKind::Fibre;
  else if (kind != "curve")
    parse_fail("unknown edge kind " + kind);
  return e;
}

json record_json(const FanoRecord& r) {
  json j;
  j["id"] = r.id;
  j["rho"] = r.rho;
  j["number"] = r.number;
  j["index"] = r.index;
  j["degree"] = r.degree;
  if (r.genus) j["genus"] = *r.genus;
  if (!r.aliases.empty()) j["aliases"] = r.aliases;
  if (r.seed) j["seed"] = *r.seed;
  j["description"] = r.description;
  j["rays"] = json::array();
  for (const auto& x : r.rays) j["rays"].push_back(ray_json(x));
  if (!r.conic_bundles.empty()) {
    j["conic_bundles"] = json::array();
    for (const auto& c : r.conic_bundles) j["conic_bundles"].push_back(bundle_json(c));
  }
  if (!r.blowdowns.empty()) {
    j["blowdowns"] = json::array();
    for (const auto& e : r.blowdowns) j["blowdowns"].push_back(edge_json(e));
  }
  j["blowups"] = r.blowups;
  j["flags"] = std::vector<std::string>(r.flags.begin(), r.flags.end());
  j["source"] = r.source;
  return j;
}

FanoRecord record_from(const json& j) {
  FanoRecord r;
  r.id = j.at("id").get<std::string>();
  r.rho = j.at("rho").get<int>();
  r.number = j.at("number").get<int>();
  r.index = get_or<int>(j, "index", 1);
  r.degree = j.at("degree").get<Int>();
  if (j.contains("genus")) r.genus = j["genus"].get<int>();
  r.aliases = get_or<std::vector<std::string>>(j, "aliases", {});
  if (j.contains("seed")) r.seed = j["seed"].get<std::string>();
  r.description = get_or<std::string>(j, "description", "");
  if (j.contains("rays"))
    for (const auto& x : j["rays"]) r.rays.push_back(ray_from(x));
  if (j.contains("conic_bundles"))
    for (const auto& c : j["conic_bundles"]) r.conic_bundles.push_back(bundle_from(c));
  if (j.contains("blowdowns"))
    for (const auto& e : j["blowdowns"]) r.blowdowns.push_back(edge_from(e));
  r.blowups = get_or<std::vector<std::string>>(j, "blowups", {});
  for (const auto& f : get_or<std::vector<std::string>>(j, "flags", {})) {
    if (f != "existence_unknown" && f != "wild_conic_bundle_possible" && f != "primitive")
      parse_fail(r.id + ": unknown flag " + f);
    r.flags.insert(f);
  }
  r.source = get_or<std::string>(j, "source", "");
  return r;
}

bool parse_id(std::string_view s, int& a, int& b) {
  auto dash = s.find('-');
  if (dash == std::string_view::npos) return false;
  auto r1 = std::from_chars(s.data(), s.data() + dash, a);
  auto r2 = std::from_chars(s.data() + dash + 1, s.data() + s.size(), b);
  return r1.ec == std::errc() && r1.ptr == s.data() + dash && r2.ec == std::errc() &&
         r2.ptr == s.data() + s.size();
}

std::string edge_text(const BlowdownEdge& e) {
  return "(pa " + std::to_string(e.pa) + ", kC " + std::to_string(e.kC) + ")";
}

// some dot vector with -K . dot == kC; the blown-up degree only sees kC and pa
std::optional<std::vector<Int>> dot_for(const NumRing& ring, Int kC) {
  const auto& a = ring.anticanonical().coords;
  std::vector<Int> dot(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && kC % a[i] == 0) {
      dot[i] = kC / a[i];
      return dot;
    }
  }
  // two coordinates via extended gcd
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      Int r0 = a[i], r1 = a[j], s0 = 1, s1 = 0, t0 = 0, t1 = 1;
      while (r1 != 0) {
        Int q = r0 / r1;
        r0 = sub(r0, mul(q, r1)), std::swap(r0, r1);
        s0 = sub(s0, mul(q, s1)), std::swap(s0, s1);
        t0 = sub(t0, mul(q, t1)), std::swap(t0, t1);
      }
      if (r0 != 0 && kC % r0 == 0) {
        dot[i] = mul(s0, kC / r0);
        dot[j] = mul(t0, kC / r0);
        return dot;
      }
    }
  return std::nullopt;
}

}  // namespace

const char* to_string(RayType t) { return kRayNames[static_cast<int>(t)]; }

std::optional<RayType> parse_ray_type(std::string_view s) {
  for (int i = 0; i < 9; ++i)
    if (s == kRayNames[i]) return static_cast<RayType>(i);
  if (s == "E3" || s == "E4") return RayType::E3_or_E4;
  return std::nullopt;
}

bool id_less(std::string_view a, std::string_view b) {
  int a1, a2, b1, b2;
  bool pa = parse_id(a, a1, a2), pb = parse_id(b, b1, b2);
  if (pa && pb) return std::pair(a1, a2) < std::pair(b1, b2);
  if (pa != pb) return pa;  // proper ids first, then names
  return a < b;
}

std::vector<BlowdownEdge> FanoRecord::all_blowdowns() const {
  std::vector<BlowdownEdge> out;
  for (const auto& r : rays) {
    if (r.type != RayType::E1 || r.target == kNonFano || !r.pa || !r.kC) continue;
    out.push_back({r.target, *r.pa, *r.kC, EdgeKind::Curve});
  }
  out.insert(out.end(), blowdowns.begin(), blowdowns.end());
  return out;
}

std::vector<ConicBundle> FanoRecord::all_conic_bundles() const {
  std::vector<ConicBundle> out;
  for (const auto& r : rays) {
    if (!is_conic(r.type) || !r.delta) continue;
    ConicBundle c;
    c.base = r.delta->base;
    c.delta = *r.delta;
    c.count = r.count;
    out.push_back(c);
  }
  out.insert(out.end(), conic_bundles.begin(), conic_bundles.end());
  return out;
}

std::string record_to_json(const FanoRecord& r, int indent) { return record_json(r).dump(indent); }

FanoRecord record_from_json(std::string_view text) {
  try {
    return record_from(json::parse(text));
  } catch (const json::exception& e) {
    parse_fail(std::string("record json: ") + e.what());
  }
}

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(), [](const VerifyEntry& e) { return !e.pass && !e.whitelisted; }));
}

std::vector<Discrepancy> parse_discrepancies(std::string_view text) {
  std::vector<Discrepancy> out;
  try {
    for (const auto& j : json::parse(text))
      out.push_back({j.at("id").get<std::string>(), j.at("check").get<std::string>(),
                     get_or<std::string>(j, "printed", ""), get_or<std::string>(j, "used", ""),
                     get_or<std::string>(j, "reason", "")});
  } catch (const json::exception& e) {
    parse_fail(std::string("discrepancy json: ") + e.what());
  }
  return out;
}

Atlas Atlas::from_json(std::string_view text) {
  Atlas a;
  try {
    json doc = json::parse(text);
    if (!doc.is_array()) parse_fail("atlas must be a json array");
    for (const auto& j : doc) a.records_.push_back(record_from(j));
  } catch (const json::exception& e) {
    parse_fail(std::string("atlas json: ") + e.what());
  }
  std::stable_sort(a.records_.begin(), a.records_.end(),
                   [](const FanoRecord& x, const FanoRecord& y) { return id_less(x.id, y.id); });
  for (std::size_t i = 1; i < a.records_.size(); ++i)
    if (a.records_[i].id == a.records_[i - 1].id) parse_fail("duplicate id " + a.records_[i].id);
  return a;
}

const FanoRecord* Atlas::find(std::string_view id) const {
  for (const auto& r : records_) {
    if (r.id == id) return &r;
    for (const auto& al : r.aliases)
      if (al == id) return &r;
  }
  return nullptr;
}

const FanoRecord& Atlas::lookup(std::string_view id) const {
  if (const FanoRecord* r = find(id)) return *r;
  throw Error(ErrorCode::NotFound, "no family " + std::string(id));
}

std::string Atlas::resolve(std::string_view id) const {
  const FanoRecord* r = find(id);
  return r ? r->id : std::string(id);
}

std::vector<const FanoRecord*> Atlas::list(
    const std::function<bool(const FanoRecord&)>& pred) const {
  std::vector<const FanoRecord*> out;
  for (const auto& r : records_)
    if (!pred || pred(r)) out.push_back(&r);
  return out;
}

std::vector<const FanoRecord*> Atlas::list(const RecordFilter& f) const {
  return list([&](const FanoRecord& r) {
    if (f.rho && r.rho != *f.rho) return false;
    if (f.degree && r.degree != *f.degree) return false;
    if (f.flag && !r.has_flag(*f.flag)) return false;
    if (f.has_ray &&
        std::none_of(r.rays.begin(), r.rays.end(), [&](const auto& x) { return x.type == *f.has_ray; }))
      return false;
    return true;
  });
}

std::vector<std::string> Atlas::identify(int rho, Int degree, const IdentifyHints& h) const {
  std::vector<std::string> out;
  for (const auto& r : records_) {
    if (r.rho != rho || r.degree != degree) continue;
    bool ok = true;
    for (RayType t : h.ray_types)
      ok = ok && std::any_of(r.rays.begin(), r.rays.end(), [&](const auto& x) { return x.type == t; });
    auto bundles = r.all_conic_bundles();
    for (Base b : h.conic_bases)
      ok = ok && std::any_of(bundles.begin(), bundles.end(), [&](const auto& c) { return c.base == b; });
    auto edges = r.all_blowdowns();
    for (const auto& want : h.blowdowns) {
      std::string w = resolve(want);
      ok = ok && std::any_of(edges.begin(), edges.end(),
                             [&](const auto& e) { return resolve(e.target) == w; });
    }
    for (const auto& want : h.edges) {
      std::string w = resolve(want.target);
      ok = ok && std::any_of(edges.begin(), edges.end(), [&](const auto& e) {
             return resolve(e.target) == w && e.pa == want.pa && e.kC == want.kC;
           });
    }
    if (h.transform_pair) {
      const auto& [base, pr] = *h.transform_pair;
      ok = ok && std::any_of(bundles.begin(), bundles.end(), [&](const ConicBundle& c) {
             if (c.base != base || c.pair.size() != 2) return false;
             return (c.pair[0] == pr.first && c.pair[1] == pr.second) ||
                    (c.pair[0] == pr.second && c.pair[1] == pr.first);
           });
    }
    if (ok) out.push_back(r.id);
  }
  return out;
}

std::vector<GraphEdge> Atlas::blowdown_graph() const {
  std::vector<GraphEdge> out;
  for (const auto& r : records_)
    for (const auto& e : r.all_blowdowns()) out.push_back({r.id, resolve(e.target), e});
  return out;
}

std::string Atlas::graph_dot() const {
  std::ostringstream os;
  os << "digraph blowdowns {\n  rankdir=BT;\n";
  for (const auto& r : records_)
    os << "  \"" << r.id << "\" [label=\"" << r.id << "\\n" << r.degree << "\"];\n";
  for (const auto& e : blowdown_graph()) {
    os << "  \"" << e.from << "\" -> \"" << e.to << "\" [label=\"" << e.curve.pa << "," << e.curve.kC
       << "\"";
    if (e.curve.kind == EdgeKind::Fibre) os << ", style=dashed";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

void Atlas::add(VerifyReport& rep, const std::string& id, const std::string& check, bool pass,
                const std::string& detail) const {
  VerifyEntry e{id, check, pass, false, detail};
  if (!pass)
    e.whitelisted = std::any_of(discrepancies_.begin(), discrepancies_.end(),
                                [&](const Discrepancy& d) { return d.id == id && d.check == check; });
  rep.entries.push_back(std::move(e));
}

void Atlas::verify_record(const FanoRecord& r, VerifyReport& rep) const {
  const std::string& id = r.id;
  add(rep, id, "degree_positive", r.degree > 0, "degree " + std::to_string(r.degree));

  if (r.genus) {
    bool ok = r.rho == 1 && r.index == 1 && r.degree == 2 * *r.genus - 2;
    add(rep, id, "genus", ok, "degree " + std::to_string(r.degree) + " vs 2g-2 with g " +
                                  std::to_string(*r.genus));
  }

  // type-dependent ray data
  for (const auto& x : r.rays) {
    bool ok = true;
    switch (x.type) {
      case RayType::C1: ok = x.delta && !x.k2_fiber && !x.pa && !x.kC; break;
      case RayType::C2:
        ok = x.delta && std::all_of(x.delta->coords.begin(), x.delta->coords.end(),
                                    [](Int v) { return v == 0; }) &&
             !x.k2_fiber && !x.pa && !x.kC;
        break;
      case RayType::D1: ok = x.k2_fiber && *x.k2_fiber >= 1 && *x.k2_fiber <= 6; break;
      case RayType::D2: ok = x.k2_fiber && *x.k2_fiber == 8; break;
      case RayType::D3: ok = x.k2_fiber && *x.k2_fiber == 9; break;
      case RayType::E1: ok = x.pa && x.kC && *x.pa >= 0; break;
      default: ok = !x.pa && !x.kC && !x.k2_fiber;
    }
    if (is_dp(x.type) || is_conic(x.type) || x.type == RayType::E1)
      add(rep, id, "ray_data", ok, to_string(x.type));
  }

  // blowdown edges
  bool has_fano_blowdown = false;
  for (const auto& e : r.all_blowdowns()) {
    const FanoRecord* t = find(e.target);
    if (!t) {
      add(rep, id, "e1_edge", false, "unknown target " + e.target);
      continue;
    }
    has_fano_blowdown = true;
    Int got = blowup_invariants(t->degree, e.kC, e.pa).degX;
    bool ok = got == r.degree && fano_filter(t->degree, e.kC, e.pa);
    if (e.kind == EdgeKind::Fibre) ok = ok && e.pa == 0 && e.kC == 2;
    add(rep, id, "e1_edge", ok,
        t->id + " " + edge_text(e) + ": " + std::to_string(t->degree) + " -> " + std::to_string(got));
    add(rep, id, "graph_dag", t->rho == r.rho - 1,
        t->id + " has rho " + std::to_string(t->rho));

    // ring path: blow up the seed ring of the target when it has one
    if (t->seed) {
      NumRing ring = seed_space(*t->seed);
      if (auto dot = dot_for(ring, e.kC)) {
        Int deg = anticanonical_degree(blowup_ring(ring, CurveData{e.pa, *dot}));
        add(rep, id, "ring_blowup", deg == r.degree,
            "Bl(" + *t->seed + ") " + edge_text(e) + " degree " + std::to_string(deg));
      }
    }
  }

  for (const auto& x : r.rays) {
    if (x.type != RayType::E2) continue;
    const FanoRecord* t = find(x.target);
    bool ok = t && t->degree - 8 == r.degree;
    add(rep, id, "e2_edge", ok, x.target + " point blowup");
  }

  // discriminant degrees from stored fibre degrees
  for (const auto& c : r.all_conic_bundles()) {
    for (const auto& k : c.k2) {
      Int want = pairing(c.delta, k.divisor);
      Int got = discriminant_degree(k.value, k_dot(k.divisor));
      add(rep, id, "conic_delta", got == want,
          std::string(to_string(c.base)) + " " + describe(k.divisor) + ": " + std::to_string(got) +
              " vs delta " + std::to_string(want));
    }
  }

  if (r.seed) {
    Int deg = anticanonical_degree(seed_space(*r.seed));
    add(rep, id, "seed_degree", deg == r.degree, *r.seed + " ring degree " + std::to_string(deg));
  }

  // flags
  bool wild_expected = id == "2-24" || id == "3-10";
  add(rep, id, "flags", r.has_flag("wild_conic_bundle_possible") == wild_expected,
      "wild conic bundles only on 2-24 and 3-10");
  add(rep, id, "flags", r.has_flag("primitive") == !has_fano_blowdown,
      has_fano_blowdown ? "has a Fano blowdown" : "no Fano blowdown");
  bool unknown_expected = r.rho == 1 && r.index == 1 && r.degree == 20;
  add(rep, id, "flags", r.has_flag("existence_unknown") == unknown_expected, "existence flag");

  // listed blowups must blow down to this record
  for (const auto& z : r.blowups) {
    const FanoRecord* zr = find(z);
    bool ok = false;
    if (zr)
      for (const auto& e : zr->all_blowdowns()) ok = ok || resolve(e.target) == id;
    add(rep, id, "blowups_sound", ok, z);
  }
  // the rho=3 table has no blowups column
  if (r.rho != 1 && r.rho != 3) {
    std::vector<std::string> missing;
    for (const auto& z : records_) {
      if (z.rho != r.rho + 1) continue;
      bool edge = false;
      for (const auto& e : z.all_blowdowns()) edge = edge || resolve(e.target) == id;
      if (edge && std::find(r.blowups.begin(), r.blowups.end(), z.id) == r.blowups.end())
        missing.push_back(z.id);
    }
    std::string detail = missing.empty() ? "complete" : "missing";
    for (const auto& m : missing) detail += " " + m;
    add(rep, id, "blowups_complete", missing.empty(), detail);
  }
}

void Atlas::verify_global(VerifyReport& rep) const {
  static const std::map<int, int> expected{{1, 18}, {2, 36}, {3, 31}, {4, 13}, {5, 3},
                                           {6, 1},  {7, 1},  {8, 1},  {9, 1},  {10, 1}};
  std::map<int, int> counts;
  for (const auto& r : records_) ++counts[r.rho];
  for (const auto& [rho, n] : expected)
    add(rep, "*", "record_count", counts[rho] == n,
        "rho " + std::to_string(rho) + ": " + std::to_string(counts[rho]) + " of " + std::to_string(n));
  add(rep, "*", "record_count", records_.size() == 106,
      std::to_string(records_.size()) + " records");

  std::map<std::string, std::string> names;
  bool unique = true;
  for (const auto& r : records_) {
    unique = names.emplace(r.id, r.id).second && unique;
    for (const auto& a : r.aliases) unique = names.emplace(a, r.id).second && unique;
  }
  add(rep, "*", "unique_names", unique, "ids and aliases");
  auto n_unknown = std::count_if(records_.begin(), records_.end(),
                                 [](const auto& r) { return r.has_flag("existence_unknown"); });
  add(rep, "*", "existence_unknown", n_unknown == 1, std::to_string(n_unknown) + " flagged");
}

VerifyReport Atlas::verify(std::string_view id) const {
  VerifyReport rep;
  verify_record(lookup(id), rep);
  return rep;
}

VerifyReport Atlas::verify_all() const {
  VerifyReport rep;
  verify_global(rep);
  for (const auto& r : records_) verify_record(r, rep);
  return rep;
}

std::string_view atlas_json_text() { return detail::embedded_atlas_json(); }

const Atlas& default_atlas() {
  static const Atlas atlas = [] {
    Atlas a = Atlas::from_json(detail::embedded_atlas_json());
    a.set_discrepancies(parse_discrepancies(detail::embedded_discrepancies_json()));
    return a;
  }();
  return atlas;
}

}  // namespace fano
