#include "cocycle/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace cocycle {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_key_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-'; }

}  // namespace

KeyValueConfig KeyValueConfig::parse(std::string_view text, const std::string& source) {
  KeyValueConfig cfg;
  cfg.source_ = source;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    // strip a comment outside quotes
    bool quoted = false;
    for (std::size_t k = 0; k < line.size(); ++k) {
      if (line[k] == '"') quoted = !quoted;
      if (line[k] == '#' && !quoted) {
        line = line.substr(0, k);
        break;
      }
    }
    std::string_view body = trim(line);
    if (body.empty()) continue;
    const std::size_t col0 = static_cast<std::size_t>(body.data() - line.data()) + 1;
    std::size_t eq = body.find('=');
    if (eq == std::string_view::npos) throw ParseError(source + ": expected key = value", line_no, col0);
    std::string_view key = trim(body.substr(0, eq));
    if (key.empty()) throw ParseError(source + ": missing key", line_no, col0);
    for (char c : key) {
      if (!is_key_char(c)) throw ParseError(source + ": bad key '" + std::string(key) + "'", line_no, col0);
    }
    std::string_view value = trim(body.substr(eq + 1));
    const std::size_t vcol = col0 + static_cast<std::size_t>(value.data() - body.data());
    std::string parsed;
    if (!value.empty() && value.front() == '"') {
      if (value.size() < 2 || value.back() != '"') throw ParseError(source + ": unterminated string", line_no, vcol);
      parsed = std::string(value.substr(1, value.size() - 2));
      if (parsed.find('"') != std::string::npos) throw ParseError(source + ": stray quote", line_no, vcol);
    } else {
      if (value.empty()) throw ParseError(source + ": missing value for '" + std::string(key) + "'", line_no, vcol);
      for (char c : value) {
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != '-') {
          throw ParseError(source + ": unquoted value must be an integer", line_no, vcol);
        }
      }
      parsed = std::string(value);
    }
    std::string k(key);
    if (cfg.values_.count(k)) throw ParseError(source + ": duplicate key '" + k + "'", line_no, col0);
    cfg.values_.emplace(k, std::move(parsed));
    cfg.lines_.emplace(k, line_no);
  }
  return cfg;
}

KeyValueConfig KeyValueConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

const std::string& KeyValueConfig::get(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw Error(source_ + ": missing key '" + key + "'");
  return it->second;
}

std::optional<std::string> KeyValueConfig::find(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

int KeyValueConfig::get_int(const std::string& key) const {
  const std::string& v = get(key);
  try {
    std::size_t used = 0;
    int x = std::stoi(v, &used);
    if (used == v.size()) return x;
  } catch (const std::exception&) {
  }
  throw ParseError(source_ + ": '" + key + "' is not an integer", lines_.at(key), 1);
}

void KeyValueConfig::require_keys_within(std::initializer_list<std::string_view> allowed) const {
  for (const auto& [k, v] : values_) {
    bool ok = false;
    for (auto a : allowed) ok = ok || a == k;
    if (!ok) throw ParseError(source_ + ": unknown key '" + k + "'", lines_.at(k), 1);
  }
}

std::optional<RingTag> config_ring(const KeyValueConfig& cfg) {
  auto r = cfg.find("ring");
  if (!r) return std::nullopt;
  RingTag tag;
  try {
    tag = parse_ring_tag(*r);
  } catch (const Error&) {
    throw Error(cfg.source() + ": unknown ring '" + *r + "'");
  }
  switch (tag) {
    case RingTag::dual_gauss: return RingTag::gauss;
    case RingTag::dual_laurent: return RingTag::laurent;
    case RingTag::dual_ratfun: return RingTag::ratfun;
    default: return tag;
  }
}

}  // namespace cocycle
