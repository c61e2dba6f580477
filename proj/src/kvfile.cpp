#include "ledchan/kvfile.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ledchan/error.hpp"

namespace ledchan {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string normalize_key(std::string key) {
  for (char& c : key)
    if (c == '-') c = '_';
  return key;
}

}  // namespace

KvMap parse_kv(const std::string& text) {
  KvMap kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      fail(Errc::ParseError, "line " + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = normalize_key(trim(stripped.substr(0, eq)));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) fail(Errc::ParseError, "line " + std::to_string(lineno) + ": empty key");
    kv[key] = value;
  }
  return kv;
}

KvMap read_kv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::IoError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_kv(buf.str());
}

std::optional<std::string> kv_get(const KvMap& kv, const std::string& key) {
  const auto it = kv.find(normalize_key(key));
  if (it == kv.end()) return std::nullopt;
  return it->second;
}

double kv_number(const KvMap& kv, const std::string& key, double fallback) {
  const auto value = kv_get(kv, key);
  if (!value) return fallback;
  char* end = nullptr;
  const double parsed = std::strtod(value->c_str(), &end);
  if (end == value->c_str() || *end != '\0')
    fail(Errc::ParseError, "value of '" + key + "' is not a number: '" + *value + "'");
  return parsed;
}

}  // namespace ledchan
