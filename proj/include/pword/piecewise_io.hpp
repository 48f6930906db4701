#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pword/piecewise.hpp"

// Serialization of piecewise tables. Three formats:
//   text        one "FORM on INTERVAL" line per piece (the figure-style view)
//   tsv         one tab-separated record per piece, preceded by the budget;
//               diff-friendly and spreadsheet-ready
//   structured  JSON with the same fields
// tsv and structured round-trip bit-exactly.

namespace pword {

inline std::string to_text(const PiecewiseThreshold& table) {
  std::string out;
  for (const Piece& piece : table.pieces) {
    out += piece.str();
    out += '\n';
  }
  return out;
}

inline std::string to_tsv(const PiecewiseThreshold& table) {
  std::ostringstream out;
  out << "# h\t" << table.h << '\n';
  out << "lo_num\tlo_den\tlo_closed\thi_num\thi_den\thi_closed\tc_q\tc_p\tc_0\n";
  for (const Piece& piece : table.pieces) {
    out << piece.lo.num() << '\t' << piece.lo.den() << '\t' << (piece.lo_closed ? 1 : 0) << '\t'
        << piece.hi.num() << '\t' << piece.hi.den() << '\t' << (piece.hi_closed ? 1 : 0) << '\t'
        << piece.form.c_q << '\t' << piece.form.c_p << '\t' << piece.form.c_0 << '\n';
  }
  return out.str();
}

inline PiecewiseThreshold from_tsv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  PiecewiseThreshold table;

  if (!std::getline(in, line) || line.rfind("# h\t", 0) != 0)
    throw std::invalid_argument("tsv table: missing '# h' line");
  table.h = std::stoll(line.substr(4));
  if (!std::getline(in, line) || line.rfind("lo_num\t", 0) != 0)
    throw std::invalid_argument("tsv table: missing column header");

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream cells{line};
    std::int64_t lo_num, lo_den, lo_closed, hi_num, hi_den, hi_closed, c_q, c_p, c_0;
    if (!(cells >> lo_num >> lo_den >> lo_closed >> hi_num >> hi_den >> hi_closed >> c_q >> c_p >>
          c_0))
      throw std::invalid_argument("tsv table: malformed record '" + line + "'");
    table.pieces.push_back({Fraction(lo_num, lo_den), Fraction(hi_num, hi_den), lo_closed != 0,
                            hi_closed != 0, LinearForm{c_q, c_p, c_0}});
  }
  return table;
}

inline nlohmann::json to_json(const PiecewiseThreshold& table) {
  nlohmann::json pieces = nlohmann::json::array();
  for (const Piece& piece : table.pieces) {
    pieces.push_back({{"lo", piece.lo.str()},
                      {"lo_closed", piece.lo_closed},
                      {"hi", piece.hi.str()},
                      {"hi_closed", piece.hi_closed},
                      {"c_q", piece.form.c_q},
                      {"c_p", piece.form.c_p},
                      {"c_0", piece.form.c_0}});
  }
  return nlohmann::json{{"h", table.h}, {"pieces", std::move(pieces)}};
}

inline PiecewiseThreshold from_json(const nlohmann::json& doc) {
  PiecewiseThreshold table;
  table.h = doc.at("h").get<std::int64_t>();
  for (const auto& entry : doc.at("pieces")) {
    table.pieces.push_back({Fraction::parse(entry.at("lo").get<std::string>()),
                            Fraction::parse(entry.at("hi").get<std::string>()),
                            entry.at("lo_closed").get<bool>(), entry.at("hi_closed").get<bool>(),
                            LinearForm{entry.at("c_q").get<std::int64_t>(),
                                       entry.at("c_p").get<std::int64_t>(),
                                       entry.at("c_0").get<std::int64_t>()}});
  }
  return table;
}

}  // namespace pword
