#ifndef PBR_REPORT_HPP
#define PBR_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace pbr {

enum class CheckStatus { pass, fail, not_applicable };

inline const char *to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "not_applicable";
  }
}

/// Outcome of a verification-style operation: which claim was checked, the
/// result, a witness for the first violation, and the computed values.
struct CheckReport {
  std::string claim;
  CheckStatus status = CheckStatus::pass;
  std::string witness;
  std::vector<std::pair<std::string, std::string>> values;

  bool passed() const { return status == CheckStatus::pass; }
  void add(const std::string &key, const std::string &value) { values.emplace_back(key, value); }
  void fail_with(const std::string &w) {
    if (status == CheckStatus::pass) { status = CheckStatus::fail; witness = w; }
  }
};

} // namespace pbr

#endif
