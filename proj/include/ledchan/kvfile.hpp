#pragma once

#include <map>
#include <optional>
#include <string>

namespace ledchan {

/// Flat "key = value" config text, one pair per line. Blank lines and lines
/// starting with '#' are skipped. Keys are normalized so '-' and '_' are
/// interchangeable.
using KvMap = std::map<std::string, std::string>;

KvMap parse_kv(const std::string& text);        // ParseError
KvMap read_kv_file(const std::string& path);    // IoError, ParseError

std::optional<std::string> kv_get(const KvMap& kv, const std::string& key);
double kv_number(const KvMap& kv, const std::string& key, double fallback);  // ParseError

}  // namespace ledchan
