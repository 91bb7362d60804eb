#ifndef ORDCOUNT_REPORT_HPP
#define ORDCOUNT_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace ordcount {

enum class CheckStatus { pass, fail, bounded_pass, not_applicable };

const char* to_string(CheckStatus s);

struct CheckEntry {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string witness;  // required for fail; bound description for bounded_pass
  std::string note;
};

// Common result of every axiom/law checker. Failures always carry a witness;
// bounded passes always carry the bound they were verified under.
struct CheckReport {
  std::string subject;
  std::vector<CheckEntry> checks;
  std::vector<std::string> truncation_notes;

  void add(std::string name, CheckStatus status, std::string witness = "",
           std::string note = "");
  void note_truncation(std::string note);

  bool all_passed() const;  // pass / bounded_pass / not_applicable count as ok
  const CheckEntry* find(const std::string& name) const;

  nlohmann::json to_json() const;
  std::string pretty() const;
};

}  // namespace ordcount

#endif
