#include "fe/report.hpp"

#include <algorithm>

namespace fe {

CheckSummary& VerificationReport::entry(const std::string& check) {
  auto it = std::find_if(checks_.begin(), checks_.end(),
                         [&](const CheckSummary& c) { return c.name == check; });
  if (it != checks_.end()) return *it;
  checks_.push_back(CheckSummary{check, 0, 0});
  return checks_.back();
}

void VerificationReport::record(const std::string& check, bool ok, const std::string& location,
                                std::vector<std::pair<std::string, SymReal>> values) {
  CheckSummary& e = entry(check);
  ++e.checked;
  if (ok) return;
  ++e.failed;
  if (e.failed <= kMaxWitnessesPerCheck) {
    witnesses_.push_back(Witness{check, location, std::move(values)});
  }
}

void VerificationReport::declare(const std::string& check) { entry(check); }

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (const auto& c : other.checks_) {
    CheckSummary& e = entry(prefix + c.name);
    e.checked += c.checked;
    e.failed += c.failed;
  }
  for (const auto& w : other.witnesses_) {
    witnesses_.push_back(Witness{prefix + w.check, w.location, w.values});
  }
  for (const auto& [k, v] : other.facts_) facts_[prefix + k] = v;
  labels_.insert(labels_.end(), other.labels_.begin(), other.labels_.end());
}

bool VerificationReport::pass() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const CheckSummary& c) { return c.pass(); });
}

std::size_t VerificationReport::checked() const {
  std::size_t n = 0;
  for (const auto& c : checks_) n += c.checked;
  return n;
}

const CheckSummary* VerificationReport::find(const std::string& check) const {
  auto it = std::find_if(checks_.begin(), checks_.end(),
                         [&](const CheckSummary& c) { return c.name == check; });
  return it == checks_.end() ? nullptr : &*it;
}

}  // namespace fe
