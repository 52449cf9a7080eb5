#include "ogus/report_io.hpp"

#include <json.hpp>

#include <sstream>

namespace ogus {

using nlohmann::json;

Report to_report(const CaseResult& r) {
  Report out;
  out.case_key = case_key(r.spec.id);
  out.rank = r.spec.rank;
  out.prime = r.spec.p;
  for (const auto& s : r.strata) {
    ReportRow row;
    row.word = word_string(s.word);
    row.length = s.length;
    row.bruhat = word_string(s.bruhat_word);
    row.ord = s.ord;
    row.clp = s.clp;
    row.ogus = s.ogus_holds;
    out.strata.push_back(row);
  }
  return out;
}

std::string emit_json(const Report& r) {
  json j;
  j["schema_version"] = r.schema_version;
  j["case"] = r.case_key;
  j["rank"] = r.rank;
  j["prime"] = r.prime;
  j["strata"] = json::array();
  for (const auto& s : r.strata) {
    json row = {{"word", s.word}, {"length", s.length}, {"bruhat", s.bruhat}, {"ord", s.ord}};
    row["clp"] = s.clp ? json(*s.clp) : json(nullptr);
    row["ogus"] = s.ogus ? json(*s.ogus) : json(nullptr);
    j["strata"].push_back(row);
  }
  return j.dump(2);
}

Report parse_json(const std::string& s) {
  try {
    json j = json::parse(s);
    Report r;
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != kSchemaVersion)
      throw std::invalid_argument("unsupported schema_version " + std::to_string(r.schema_version));
    r.case_key = j.at("case").get<std::string>();
    r.rank = j.at("rank").get<int>();
    r.prime = j.at("prime").get<long long>();
    for (const auto& row : j.at("strata")) {
      ReportRow x;
      x.word = row.at("word").get<std::string>();
      x.length = row.at("length").get<int>();
      x.bruhat = row.at("bruhat").get<std::string>();
      x.ord = row.at("ord").get<long long>();
      if (!row.at("clp").is_null()) x.clp = row.at("clp").get<long long>();
      if (!row.at("ogus").is_null()) x.ogus = row.at("ogus").get<bool>();
      r.strata.push_back(x);
    }
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad report json: ") + e.what());
  }
}

// CSV: a comment line carries the header fields, then one row per stratum
std::string emit_csv(const Report& r) {
  std::ostringstream os;
  os << "# schema_version=" << r.schema_version << ",case=" << r.case_key << ",rank=" << r.rank
     << ",prime=" << r.prime << "\n";
  os << "word,length,bruhat,ord,clp,ogus\n";
  for (const auto& s : r.strata) {
    os << s.word << "," << s.length << "," << s.bruhat << "," << s.ord << ",";
    if (s.clp) os << *s.clp;
    os << ",";
    if (s.ogus) os << (*s.ogus ? "true" : "false");
    os << "\n";
  }
  return os.str();
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

Report parse_csv(const std::string& s) {
  std::istringstream is(s);
  std::string line;
  Report r;
  if (!std::getline(is, line) || line.rfind("# ", 0) != 0)
    throw std::invalid_argument("bad report csv: missing header comment");
  for (const auto& kv : split(line.substr(2), ',')) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad report csv header");
    std::string k = kv.substr(0, eq), v = kv.substr(eq + 1);
    if (k == "schema_version") r.schema_version = std::stoi(v);
    else if (k == "case") r.case_key = v;
    else if (k == "rank") r.rank = std::stoi(v);
    else if (k == "prime") r.prime = std::stoll(v);
  }
  if (r.schema_version != kSchemaVersion) throw std::invalid_argument("unsupported schema_version");
  if (!std::getline(is, line) || line != "word,length,bruhat,ord,clp,ogus")
    throw std::invalid_argument("bad report csv: column row");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto f = split(line, ',');
    if (f.size() != 6) throw std::invalid_argument("bad report csv row: " + line);
    ReportRow x;
    x.word = f[0];
    x.length = std::stoi(f[1]);
    x.bruhat = f[2];
    x.ord = std::stoll(f[3]);
    if (!f[4].empty()) x.clp = std::stoll(f[4]);
    if (f[5] == "true") x.ogus = true;
    else if (f[5] == "false") x.ogus = false;
    r.strata.push_back(x);
  }
  return r;
}

std::string emit_text(const Report& r) {
  std::ostringstream os;
  os << r.case_key << " rank " << r.rank << " p=" << r.prime << "\n";
  os << "length  ord  clp  ogus  bruhat | word\n";
  for (const auto& s : r.strata) {
    os << s.length << "\t" << s.ord << "\t" << (s.clp ? std::to_string(*s.clp) : "-") << "\t"
       << (s.ogus ? (*s.ogus ? "yes" : "NO") : "-") << "\t" << s.bruhat << " | " << s.word << "\n";
  }
  return os.str();
}

}  // namespace ogus
