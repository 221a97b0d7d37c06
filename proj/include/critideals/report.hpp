#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace critideals {

/// Pass/fail counts for one named check, with the first few failure witnesses.
struct CheckTally {
  static constexpr std::size_t kMaxWitnesses = 5;

  std::string name;
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::vector<std::string> witnesses;

  bool ok() const { return violations == 0; }
  /// The witness callback runs only for failures.
  void record(bool passed, const std::function<std::string()>& witness);
};

class CheckReport {
 public:
  CheckTally& tally(const std::string& name);
  const CheckTally* find(const std::string& name) const;
  const std::vector<CheckTally>& tallies() const { return tallies_; }
  bool ok() const;
  std::size_t instances() const;
  std::size_t violations() const;
  void merge(const CheckReport& other);
  /// One line per check: "name: instances=N violations=M".
  std::string summary() const;

 private:
  std::vector<CheckTally> tallies_;
};

/// One JSON-lines record {tree, j, check, status, witness?}.
struct ReportRecord {
  std::string tree;
  std::optional<int> j;
  std::string check;
  std::string status;
  std::optional<std::string> witness;

  std::string to_json() const;
};

}  // namespace critideals
