#include "ordcount/report.hpp"

#include <sstream>

namespace ordcount {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::bounded_pass: return "bounded-pass";
    case CheckStatus::not_applicable: return "not-applicable";
  }
  return "?";
}

void CheckReport::add(std::string name, CheckStatus status, std::string witness,
                      std::string note) {
  checks.push_back({std::move(name), status, std::move(witness), std::move(note)});
}

void CheckReport::note_truncation(std::string note) {
  truncation_notes.push_back(std::move(note));
}

bool CheckReport::all_passed() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::fail) return false;
  return true;
}

const CheckEntry* CheckReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json out;
  out["subject"] = subject;
  out["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json e;
    e["name"] = c.name;
    e["status"] = to_string(c.status);
    if (!c.witness.empty()) e["witness"] = c.witness;
    if (!c.note.empty()) e["note"] = c.note;
    out["checks"].push_back(std::move(e));
  }
  if (!truncation_notes.empty()) out["truncation_notes"] = truncation_notes;
  return out;
}

std::string CheckReport::pretty() const {
  std::ostringstream os;
  os << subject << "\n";
  for (const auto& c : checks) {
    os << "  [" << to_string(c.status) << "] " << c.name;
    if (!c.witness.empty()) os << "  witness: " << c.witness;
    if (!c.note.empty()) os << "  (" << c.note << ")";
    os << "\n";
  }
  for (const auto& n : truncation_notes) os << "  ~ " << n << "\n";
  return os.str();
}

}  // namespace ordcount
