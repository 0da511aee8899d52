#include "eishyp/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace eishyp {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_bool(const std::string& v, const std::string& key) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw std::runtime_error("catalog: key '" + key + "' wants true/false, got '" + v + "'");
}

struct RawEntry {
  std::vector<std::pair<std::string, std::string>> kv;
  int line = 0;

  const std::string* find(const std::string& key) const {
    for (const auto& p : kv)
      if (p.first == key) return &p.second;
    return nullptr;
  }
  std::string need(const std::string& key) const {
    const std::string* v = find(key);
    if (!v)
      throw std::runtime_error("catalog: entry near line " + std::to_string(line) +
                               " is missing key '" + key + "'");
    return *v;
  }
};

const std::set<std::string> kKnownKeys = {
    "id", "kind", "family", "exponent", "a", "shifted", "b", "weight",
    "rhs", "alt_rhs", "pure_imaginary", "adjudicate_scaling", "description"};

CatalogEntry build_entry(const RawEntry& raw) {
  for (const auto& p : raw.kv)
    if (!kKnownKeys.count(p.first))
      throw std::runtime_error("catalog: unknown key '" + p.first +
                               "' near line " + std::to_string(raw.line));
  CatalogEntry e;
  e.id = raw.need("id");
  std::string kind = raw.need("kind");
  if (kind != "single" && kind != "double")
    throw std::runtime_error("catalog: entry " + e.id + ": bad kind '" + kind + "'");
  e.is_double = kind == "double";

  e.weight = WeightFn::parse(raw.need("weight"));
  e.rhs = ConstExpr::parse(raw.need("rhs"));
  if (const std::string* v = raw.find("alt_rhs")) e.alt_rhs = ConstExpr::parse(*v);
  if (const std::string* v = raw.find("pure_imaginary"))
    e.pure_imaginary = parse_bool(*v, "pure_imaginary");
  if (const std::string* v = raw.find("adjudicate_scaling"))
    e.adjudicate_scaling = parse_bool(*v, "adjudicate_scaling");
  if (const std::string* v = raw.find("description")) e.description = *v;

  if (e.is_double) {
    e.family.kind = family_kind_from_name(raw.need("family"));
    e.family.exponent = std::stoi(raw.need("exponent"));
    e.family.a = rational_from_string(raw.need("a"));
    if (const std::string* v = raw.find("shifted"))
      e.family.shifted = parse_bool(*v, "shifted");
    if (e.family.shifted) e.family.b = rational_from_string(raw.need("b"));
    e.family.weight = e.weight;
    if (e.adjudicate_scaling && e.family.kind != FamilyKind::plain_odd &&
        e.family.kind != FamilyKind::alternating_odd)
      throw std::runtime_error("catalog: entry " + e.id +
                               ": adjudicate_scaling needs an odd-line family");
  } else {
    for (const char* k : {"family", "exponent", "a", "shifted", "b"})
      if (raw.find(k))
        throw std::runtime_error("catalog: entry " + e.id +
                                 ": key '" + std::string(k) + "' is double-only");
    if (e.adjudicate_scaling)
      throw std::runtime_error("catalog: entry " + e.id +
                               ": adjudicate_scaling is double-only");
  }
  return e;
}

}  // namespace

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("catalog: cannot open '" + path + "'");
  std::vector<RawEntry> raws;
  std::string line;
  int lineno = 0;
  bool in_entry = false;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line == "[entry]") {
      raws.push_back(RawEntry{});
      raws.back().line = lineno;
      in_entry = true;
      continue;
    }
    size_t eq = line.find('=');
    if (!in_entry || eq == std::string::npos)
      throw std::runtime_error("catalog: stray line " + std::to_string(lineno) +
                               ": '" + line + "'");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.empty() || val.empty())
      throw std::runtime_error("catalog: empty key or value at line " +
                               std::to_string(lineno));
    raws.back().kv.emplace_back(key, val);
  }

  std::vector<CatalogEntry> out;
  std::set<std::string> ids;
  for (const RawEntry& raw : raws) {
    CatalogEntry e = build_entry(raw);
    if (!ids.insert(e.id).second)
      throw std::runtime_error("catalog: duplicate id '" + e.id + "'");
    out.push_back(std::move(e));
  }
  return out;
}

std::string default_data_dir() {
  const char* env = std::getenv("EISHYP_DATA_DIR");
  if (env && *env) return env;
  return "data";
}

}  // namespace eishyp
