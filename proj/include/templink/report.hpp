#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "templink/census.hpp"

namespace templink {

enum class Format { csv, json, text };

/// "csv", "json" or "text"; throws std::invalid_argument otherwise.
Format parse_format(const std::string& name);

/// word1,word2,cr,na1,nb1,na2,nb2,lk_num,lk_den,negative
std::string csv_header();
std::string csv_row(const PairReport& r);

nlohmann::ordered_json to_json(const PairReport& r);
nlohmann::ordered_json to_json(const TripleSummary& s);
nlohmann::ordered_json to_json(const RangeSummary& s);

/// Pair reports for one triple. JSON adds the triple and elapsed seconds.
void write_pairs(std::ostream& os, const Triple& t, const std::vector<PairReport>& reports, Format f,
                 double seconds);

/// Per-triple lines plus the aggregate worst pair and wall time.
void write_range(std::ostream& os, const RangeSummary& s, Format f);

/// Fixed-width columns; every row padded to the widest cell of its column.
std::string align_columns(const std::vector<std::vector<std::string>>& rows);

}  // namespace templink
