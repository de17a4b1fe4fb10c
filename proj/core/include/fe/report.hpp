#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fe/symreal.hpp"

namespace fe {

/// A failing instance of a check with the exact values involved.
struct Witness {
  std::string check;
  std::string location;
  std::vector<std::pair<std::string, SymReal>> values;
};

struct CheckSummary {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  bool pass() const { return failed == 0; }
};

/// Structured pass/fail result. Checks and witnesses keep insertion order,
/// which callers make lexicographic in the node being checked.
class VerificationReport {
 public:
  static constexpr std::size_t kMaxWitnessesPerCheck = 8;

  explicit VerificationReport(std::string subject = {}) : subject_(std::move(subject)) {}

  /// Records one evaluation of `check`. Failures keep at most
  /// kMaxWitnessesPerCheck witnesses but are all counted.
  void record(const std::string& check, bool ok, const std::string& location = {},
              std::vector<std::pair<std::string, SymReal>> values = {});
  /// Declares a check that may end up with zero evaluations.
  void declare(const std::string& check);

  void set_fact(const std::string& key, std::string value) { facts_[key] = std::move(value); }
  void add_label(std::string label) { labels_.push_back(std::move(label)); }
  /// Appends every check, witness, fact and label of `other`, with check
  /// names prefixed by `prefix`.
  void merge(const VerificationReport& other, const std::string& prefix = {});

  bool pass() const;
  std::size_t checked() const;
  const std::string& subject() const { return subject_; }
  const std::vector<CheckSummary>& checks() const { return checks_; }
  const std::vector<Witness>& witnesses() const { return witnesses_; }
  const std::map<std::string, std::string>& facts() const { return facts_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const CheckSummary* find(const std::string& check) const;

 private:
  CheckSummary& entry(const std::string& check);

  std::string subject_;
  std::vector<CheckSummary> checks_;
  std::vector<Witness> witnesses_;
  std::map<std::string, std::string> facts_;
  std::vector<std::string> labels_;
};

}  // namespace fe
