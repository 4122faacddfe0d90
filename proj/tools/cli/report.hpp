#pragma once

// Output for the command-line tool. Text mode prints readable lines; records
// mode prints one `kind<TAB>key=value<TAB>...` line per record.

#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cocycle::cli {

using Fields = std::vector<std::pair<std::string, std::string>>;

class Report {
 public:
  enum class Format { text, records };

  Report(Format format, std::ostream& out) : format_(format), out_(out) {}

  Format format() const { return format_; }

  /// In text mode prints `text`, or `kind: k=v, ...` when `text` is empty.
  void record(std::string_view kind, const Fields& fields, const std::string& text = {});
  /// A pass/fail verification; the first failure is remembered.
  void check(const std::string& name, bool ok, const std::string& detail = {});
  /// Free-form text, ignored in records mode.
  void note(const std::string& text);

  bool ok() const { return failed_.empty(); }
  const std::string& first_failure() const { return failed_; }
  int checks() const { return checks_; }

  /// Emits the failure record (if any) and returns the exit code.
  int finish(const std::string& command);

 private:
  Format format_;
  std::ostream& out_;
  std::string failed_;
  std::string failed_detail_;
  int checks_ = 0;
};

}  // namespace cocycle::cli
