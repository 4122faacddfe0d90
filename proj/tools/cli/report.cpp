#include "report.hpp"

namespace cocycle::cli {

namespace {

std::string sanitize(std::string s) {
  for (char& c : s) {
    if (c == '\t' || c == '\n') c = ' ';
  }
  return s;
}

}  // namespace

void Report::record(std::string_view kind, const Fields& fields, const std::string& text) {
  if (format_ == Format::records) {
    out_ << kind;
    for (const auto& [k, v] : fields) out_ << '\t' << k << '=' << sanitize(v);
    out_ << '\n';
    return;
  }
  if (!text.empty()) {
    out_ << text << '\n';
    return;
  }
  out_ << kind << ':';
  bool first = true;
  for (const auto& [k, v] : fields) {
    out_ << (first ? " " : ", ") << k << '=' << v;
    first = false;
  }
  out_ << '\n';
}

void Report::check(const std::string& name, bool ok, const std::string& detail) {
  ++checks_;
  if (!ok && failed_.empty()) {
    failed_ = name;
    failed_detail_ = detail;
  }
  Fields f{{"name", name}, {"status", ok ? "pass" : "fail"}};
  if (!detail.empty()) f.emplace_back("detail", detail);
  std::string text = name + ": " + (ok ? "OK" : "FAIL");
  if (!detail.empty()) text += " (" + detail + ")";
  record("check", f, text);
}

void Report::note(const std::string& text) {
  if (format_ == Format::text) out_ << text << '\n';
}

int Report::finish(const std::string& command) {
  if (ok()) return 0;
  Fields f{{"command", command}, {"check", failed_}};
  if (!failed_detail_.empty()) f.emplace_back("detail", failed_detail_);
  record("failure", f, "FAILED: " + failed_);
  return 1;
}

}  // namespace cocycle::cli
