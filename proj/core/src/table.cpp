#include "fano/table.hpp"

#include <sstream>

#include "json.hpp"

namespace fano {

namespace {

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string x_cell(const std::vector<std::string>& xs) { return xs.empty() ? "?" : join(xs, " or "); }

std::string num(Int v) { return std::to_string(v); }

}  // namespace

std::optional<Format> parse_format(std::string_view s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "markdown" || s == "md") return Format::Markdown;
  if (s == "dot") return Format::Dot;
  return std::nullopt;
}

const char* to_string(Format f) {
  switch (f) {
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Markdown: return "markdown";
    case Format::Dot: return "dot";
  }
  return "?";
}

std::string render(const Table& t, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::Csv:
      for (std::size_t i = 0; i < t.keys.size(); ++i) os << (i ? "," : "") << t.keys[i];
      os << "\n";
      for (const auto& row : t.cells) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
        os << "\n";
      }
      break;
    case Format::Markdown:
      os << "| " << join(t.titles, " | ") << " |\n|";
      for (std::size_t i = 0; i < t.titles.size(); ++i) os << "---|";
      os << "\n";
      for (const auto& row : t.cells) os << "| " << join(row, " | ") << " |\n";
      break;
    case Format::Json: {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& row : t.cells) {
        nlohmann::ordered_json o;
        for (std::size_t i = 0; i < row.size(); ++i) {
          bool is_num = i < t.numeric.size() && t.numeric[i] && !row[i].empty() &&
                        row[i].find_first_not_of("-0123456789") == std::string::npos;
          if (is_num)
            o[t.keys[i]] = std::stoll(row[i]);
          else
            o[t.keys[i]] = row[i];
        }
        arr.push_back(o);
      }
      os << arr.dump(2) << "\n";
      break;
    }
    case Format::Dot:
      throw Error(ErrorCode::InvalidArgument, "dot output is only available for the graph");
  }
  return os.str();
}

Table transform_table(const std::vector<TransformRow>& rows) {
  Table t;
  bool f1 = !rows.empty() && rows.front().base == Base::F1;
  t.titles = {"X", "Y", "Y'", "(-K_X)^3", f1 ? "Delta_f" : "deg B", "p_a(B)", "-K_Y.B_Y",
              "-K_Y'.B_Y'"};
  t.keys = {"x", "y", "yp", "degX", "curve", "pa", "kYB", "kYpBp"};
  t.numeric = {false, false, false, true, false, true, true, true};
  for (const auto& r : rows) {
    std::string curve = r.base == Base::P2 ? num(r.curve.coords[0]) : describe(r.curve);
    t.cells.push_back({x_cell(r.x_candidates), r.y, r.yp, num(r.degX), curve, num(r.pa),
                       num(r.kYB), num(r.kYpBp)});
  }
  return t;
}

Table f1_rho3_table(const std::vector<F1Rho3Row>& rows) {
  Table t;
  t.titles = {"X", "(-K_X)^3", "X'", "(-K_X')^3", "X' -> P2", "deg Delta_f'"};
  t.keys = {"x", "degX", "x_prime", "degXp", "bundle", "delta"};
  t.numeric = {false, true, false, true, false, true};
  for (const auto& r : rows)
    t.cells.push_back({r.x.empty() ? "?" : r.x, num(r.degX), r.x_prime, num(r.degXp),
                       to_string(r.bundle_type), num(r.delta_degree)});
  return t;
}

Table fibre_table(const std::vector<FibreBlowupRow>& rows) {
  Table t;
  t.titles = {"X", "X~", "(-K_X)^3", "(-K_X~)^3", "S~", "Delta_f~"};
  t.keys = {"x", "x_tilde", "degX", "degXt", "base", "delta"};
  t.numeric = {false, false, true, true, false, false};
  for (const auto& r : rows)
    t.cells.push_back({x_cell(r.x_candidates), r.x_tilde, num(r.degX), num(r.degXt),
                       to_string(r.base),
                       r.delta_degree ? "deg=" + num(*r.delta_degree) : std::string("empty")});
  return t;
}

Table rho5_table(const std::vector<Rho5Row>& rows) {
  Table t;
  t.titles = {"X", "Y", "Y'", "Z", "(-K_X)^3"};
  t.keys = {"x", "y", "yp", "z", "degX"};
  t.numeric = {false, false, false, false, true};
  for (const auto& r : rows) t.cells.push_back({x_cell(r.x_candidates), r.y, r.yp, r.z, num(r.degX)});
  return t;
}

Table disjoint_table(const std::vector<DisjointPairRow>& rows) {
  Table t;
  t.titles = {"X", "Y_1", "Y_2", "(-K_X)^3", "Delta_h"};
  t.keys = {"x", "y1", "y2", "degX", "delta"};
  t.numeric = {false, false, false, true, false};
  for (const auto& r : rows)
    t.cells.push_back({x_cell(r.x_candidates), r.y1, r.y2, num(r.degX),
                       r.delta ? describe(*r.delta) : std::string("?")});
  return t;
}

Table record_table(const std::vector<const FanoRecord*>& recs) {
  Table t;
  t.titles = {"No.", "(-K_X)^3", "index", "rays", "flags", "description"};
  t.keys = {"id", "degree", "index", "rays", "flags", "description"};
  t.numeric = {false, true, true, false, false, false};
  for (const FanoRecord* r : recs) {
    std::vector<std::string> rays;
    for (const auto& x : r->rays) {
      std::string s = to_string(x.type);
      if (x.count > 1) s += "x" + std::to_string(x.count);
      rays.push_back(s);
    }
    t.cells.push_back({r->id, num(r->degree), std::to_string(r->index), join(rays, " "),
                       join(std::vector<std::string>(r->flags.begin(), r->flags.end()), " "),
                       r->description});
  }
  return t;
}

Table verify_table(const VerifyReport& rep) {
  Table t;
  t.titles = {"id", "check", "result", "detail"};
  t.keys = {"id", "check", "result", "detail"};
  t.numeric = {false, false, false, false};
  for (const auto& e : rep.entries)
    t.cells.push_back({e.id, e.check, e.pass ? "pass" : e.whitelisted ? "known" : "FAIL", e.detail});
  return t;
}

}  // namespace fano
