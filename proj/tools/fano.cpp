// fano: query the atlas, regenerate the classification tables, run the verifier
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "fano/atlas.hpp"
#include "fano/enumerate.hpp"
#include "fano/numring.hpp"
#include "fano/table.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

fano::Format format_of(const std::string& s, fano::Format fallback) {
  if (s.empty()) return fallback;
  auto f = fano::parse_format(s);
  if (!f) throw UsageError("unknown format '" + s + "'");
  return *f;
}

std::string enumerate_stage(const std::string& stage, fano::Int cap, fano::Format f) {
  using namespace fano;
  if (stage == "p2") return render(transform_table(enumerate_P2(cap)), f);
  if (stage == "p1p1-4") return render(transform_table(enumerate_P1P1_rho4(cap)), f);
  if (stage == "f1-3") return render(f1_rho3_table(enumerate_F1_rho3()), f);
  if (stage == "f1-4") return render(transform_table(enumerate_F1_rho4(cap)), f);
  if (stage == "fibre-4") return render(fibre_table(enumerate_fibre_blowups_rho4(cap)), f);
  if (stage == "rho5") return render(rho5_table(enumerate_rho5(cap)), f);
  if (stage == "disjoint-p3") return render(disjoint_table(enumerate_disjoint_pairs("P3")), f);
  if (stage == "disjoint-q") return render(disjoint_table(enumerate_disjoint_pairs("Q")), f);
  throw UsageError("unknown stage '" + stage + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fano threefold atlas and classification tables"};
  app.require_subcommand(1);
  std::string format;

  std::string show_id;
  auto* show = app.add_subcommand("show", "print one record");
  show->add_option("id", show_id, "family id or alias")->required();
  show->add_option("--format", format, "json (default) or markdown");

  std::optional<int> rho;
  std::optional<fano::Int> degree;
  std::string has_ray;
  auto* list = app.add_subcommand("list", "list records");
  list->add_option("--rho", rho, "Picard rank");
  list->add_option("--degree", degree, "anticanonical degree");
  list->add_option("--has-ray", has_ray, "extremal ray type, e.g. E1");
  list->add_option("--format", format, "markdown (default), csv or json");

  std::string stage;
  fano::Int cap = fano::kDefaultCap;
  auto* en = app.add_subcommand("enumerate", "regenerate a classification table");
  en->add_option("stage", stage, "p2, p1p1-4, f1-3, f1-4, fibre-4, rho5, disjoint-p3, disjoint-q")
      ->required();
  en->add_option("--format", format, "markdown (default), csv or json");
  en->add_option("--cap", cap, "search cap on each degree coordinate");

  std::string verify_id;
  bool verify_all = false;
  auto* ver = app.add_subcommand("verify", "check records against the calculi");
  ver->add_option("id", verify_id, "family id");
  ver->add_flag("--all", verify_all, "verify every record and cross-check the enumerators");
  ver->add_option("--format", format, "markdown (default), csv or json");

  auto* graph = app.add_subcommand("graph", "blowdown graph");
  graph->add_option("--format", format, "dot (default), csv or json");

  std::string seed;
  auto* ring = app.add_subcommand("ring", "print a built-in intersection ring");
  ring->add_option("seed", seed, "seed name; omit to list them");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    const fano::Atlas& atlas = fano::default_atlas();

    if (*show) {
      const auto& r = atlas.lookup(show_id);
      auto f = format_of(format, fano::Format::Json);
      if (f == fano::Format::Json)
        std::cout << fano::record_to_json(r) << "\n";
      else
        std::cout << fano::render(fano::record_table({&r}), f);
      return kOk;
    }

    if (*list) {
      fano::RecordFilter filter;
      filter.rho = rho;
      filter.degree = degree;
      if (!has_ray.empty()) {
        filter.has_ray = fano::parse_ray_type(has_ray);
        if (!filter.has_ray) throw UsageError("unknown ray type '" + has_ray + "'");
      }
      std::cout << fano::render(fano::record_table(atlas.list(filter)),
                                format_of(format, fano::Format::Markdown));
      return kOk;
    }

    if (*en) {
      std::cout << enumerate_stage(stage, cap, format_of(format, fano::Format::Markdown));
      return kOk;
    }

    if (*ver) {
      if (verify_all == !verify_id.empty()) throw UsageError("give either an id or --all");
      fano::VerifyReport rep = verify_all ? atlas.verify_all() : atlas.verify(verify_id);
      if (verify_all)
        for (auto& e : fano::crosscheck_conic_bundles(atlas).entries) rep.entries.push_back(e);
      std::cout << fano::render(fano::verify_table(rep), format_of(format, fano::Format::Markdown));
      std::size_t known = 0, failed = rep.failures();
      for (const auto& e : rep.entries) known += (!e.pass && e.whitelisted);
      std::cerr << rep.entries.size() << " checks, " << failed << " failed, " << known
                << " known discrepancies\n";
      return failed == 0 ? kOk : kVerifyFailed;
    }

    if (*graph) {
      auto f = format_of(format, fano::Format::Dot);
      if (f == fano::Format::Dot) {
        std::cout << atlas.graph_dot();
      } else {
        fano::Table t;
        t.titles = t.keys = {"from", "to", "pa", "kC", "kind"};
        t.numeric = {false, false, true, true, false};
        for (const auto& e : atlas.blowdown_graph())
          t.cells.push_back({e.from, e.to, std::to_string(e.curve.pa), std::to_string(e.curve.kC),
                             e.curve.kind == fano::EdgeKind::Fibre ? "fibre" : "curve"});
        std::cout << fano::render(t, f);
      }
      return kOk;
    }

    if (*ring) {
      if (seed.empty()) {
        for (const auto& s : fano::seed_names()) std::cout << s << "\n";
      } else {
        std::cout << fano::ring_to_json(fano::seed_space(seed)) << "\n";
      }
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "fano: " << e.what() << "\n";
    return kUsage;
  } catch (const fano::Error& e) {
    std::cerr << "fano: " << e.what() << "\n";
    bool usage = e.code() == fano::ErrorCode::NotFound || e.code() == fano::ErrorCode::UnknownSeed ||
                 e.code() == fano::ErrorCode::InvalidArgument;
    return usage ? kUsage : kVerifyFailed;
  }
  return kOk;
}
