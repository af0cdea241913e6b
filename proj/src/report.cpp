#include "templink/report.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace templink {

using nlohmann::ordered_json;

namespace {

// Milliseconds resolution keeps the timing field short and stable in shape.
double rounded_seconds(double s) { return std::round(s * 1000.0) / 1000.0; }

std::string seconds_str(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

std::vector<std::string> text_row(const PairReport& r) {
  return {r.word1.str(), r.word2.str(), std::to_string(r.cr), r.lk.str(), r.negative ? "yes" : "NO"};
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  if (name == "text") return Format::text;
  throw std::invalid_argument("unknown format '" + name + "' (expected csv, json or text)");
}

std::string csv_header() { return "word1,word2,cr,na1,nb1,na2,nb2,lk_num,lk_den,negative"; }

std::string csv_row(const PairReport& r) {
  std::string out = r.word1.str() + ',' + r.word2.str() + ',' + std::to_string(r.cr);
  for (long long n : {r.counts1.a, r.counts1.b, r.counts2.a, r.counts2.b}) out += ',' + std::to_string(n);
  out += ',' + std::to_string(r.lk.num()) + ',' + std::to_string(r.lk.den());
  out += r.negative ? ",true" : ",false";
  return out;
}

ordered_json to_json(const PairReport& r) {
  return ordered_json{{"word1", r.word1.str()}, {"word2", r.word2.str()}, {"cr", r.cr},
                      {"na1", r.counts1.a},     {"nb1", r.counts1.b},     {"na2", r.counts2.a},
                      {"nb2", r.counts2.b},     {"lk_num", r.lk.num()},   {"lk_den", r.lk.den()},
                      {"lk", r.lk.str()},       {"negative", r.negative}};
}

ordered_json to_json(const TripleSummary& s) {
  ordered_json j{{"triple", s.triple.str()},
                 {"words", s.words},
                 {"pairs", s.pairs},
                 {"violations", s.violations}};
  j["worst"] = s.worst ? to_json(*s.worst) : ordered_json(nullptr);
  ordered_json bad = ordered_json::array();
  for (const auto& r : s.violating) bad.push_back(to_json(r));
  j["violating"] = bad;
  j["seconds"] = rounded_seconds(s.seconds);
  return j;
}

ordered_json to_json(const RangeSummary& s) {
  ordered_json triples = ordered_json::array();
  for (const auto& t : s.triples) triples.push_back(to_json(t));
  ordered_json j{{"triples", triples}, {"pairs", s.pairs}, {"violations", s.violations}};
  j["worst_triple"] = s.worst_triple ? ordered_json(s.worst_triple->str()) : ordered_json(nullptr);
  j["worst"] = s.worst ? to_json(*s.worst) : ordered_json(nullptr);
  j["seconds"] = rounded_seconds(s.seconds);
  return j;
}

std::string align_columns(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += "  ";
      line += row[c];
      if (c + 1 < row.size()) line.append(width[c] - row[c].size(), ' ');
    }
    out += line + '\n';
  }
  return out;
}

void write_pairs(std::ostream& os, const Triple& t, const std::vector<PairReport>& reports, Format f,
                 double seconds) {
  switch (f) {
    case Format::csv:
      os << csv_header() << '\n';
      for (const auto& r : reports) os << csv_row(r) << '\n';
      break;
    case Format::json: {
      ordered_json pairs = ordered_json::array();
      for (const auto& r : reports) pairs.push_back(to_json(r));
      ordered_json j{{"triple", t.str()}, {"pairs", pairs}, {"seconds", rounded_seconds(seconds)}};
      os << j.dump(2) << '\n';
      break;
    }
    case Format::text: {
      std::vector<std::vector<std::string>> rows{{"word1", "word2", "cr", "lk", "negative"}};
      for (const auto& r : reports) rows.push_back(text_row(r));
      os << "triple " << t.str() << ", " << reports.size() << " pairs\n" << align_columns(rows);
      break;
    }
  }
}

void write_range(std::ostream& os, const RangeSummary& s, Format f) {
  switch (f) {
    case Format::csv:
      os << "triple,words,pairs,violations,worst_word1,worst_word2,worst_lk_num,worst_lk_den,seconds\n";
      for (const auto& t : s.triples) {
        os << '"' << t.triple.str() << "\"," << t.words << ',' << t.pairs << ',' << t.violations << ',';
        if (t.worst) {
          os << t.worst->word1.str() << ',' << t.worst->word2.str() << ',' << t.worst->lk.num() << ','
             << t.worst->lk.den();
        } else {
          os << ",,,";
        }
        os << ',' << seconds_str(t.seconds) << '\n';
      }
      break;
    case Format::json:
      os << to_json(s).dump(2) << '\n';
      break;
    case Format::text: {
      std::vector<std::vector<std::string>> rows{{"triple", "words", "pairs", "violations", "worst lk", "worst pair"}};
      for (const auto& t : s.triples) {
        rows.push_back({t.triple.str(), std::to_string(t.words), std::to_string(t.pairs),
                        std::to_string(t.violations), t.worst ? t.worst->lk.str() : "-",
                        t.worst ? t.worst->word1.str() + " " + t.worst->word2.str() : "-"});
      }
      os << align_columns(rows);
      os << s.triples.size() << " triples, " << s.pairs << " pairs, " << s.violations << " violations";
      if (s.worst) {
        os << ", worst lk " << s.worst->lk.str() << " at " << s.worst_triple->str() << " ("
           << s.worst->word1.str() << ", " << s.worst->word2.str() << ")";
      }
      os << ", " << seconds_str(s.seconds) << " s\n";
      break;
    }
  }
}

}  // namespace templink
