#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fano/enumerate.hpp"

namespace fano {

enum class Format { Json, Csv, Markdown, Dot };

std::optional<Format> parse_format(std::string_view s);
const char* to_string(Format f);

// A rendered table: column titles for markdown, keys for csv / json.
struct Table {
  std::vector<std::string> titles;
  std::vector<std::string> keys;
  std::vector<std::vector<std::string>> cells;
  std::vector<bool> numeric;  // per column, json emits numbers unquoted
};

std::string render(const Table& t, Format f);

Table transform_table(const std::vector<TransformRow>& rows);
Table f1_rho3_table(const std::vector<F1Rho3Row>& rows);
Table fibre_table(const std::vector<FibreBlowupRow>& rows);
Table rho5_table(const std::vector<Rho5Row>& rows);
Table disjoint_table(const std::vector<DisjointPairRow>& rows);
Table record_table(const std::vector<const FanoRecord*>& recs);
Table verify_table(const VerifyReport& rep);

}  // namespace fano
