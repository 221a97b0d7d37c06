#include "critideals/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace critideals {

void CheckTally::record(bool passed, const std::function<std::string()>& witness) {
  ++instances;
  if (passed) return;
  ++violations;
  if (witnesses.size() < kMaxWitnesses && witness) witnesses.push_back(witness());
}

CheckTally& CheckReport::tally(const std::string& name) {
  for (auto& t : tallies_) {
    if (t.name == name) return t;
  }
  tallies_.push_back(CheckTally{name, 0, 0, {}});
  return tallies_.back();
}

const CheckTally* CheckReport::find(const std::string& name) const {
  for (const auto& t : tallies_) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

bool CheckReport::ok() const {
  return std::all_of(tallies_.begin(), tallies_.end(), [](const CheckTally& t) { return t.ok(); });
}

std::size_t CheckReport::instances() const {
  std::size_t n = 0;
  for (const auto& t : tallies_) n += t.instances;
  return n;
}

std::size_t CheckReport::violations() const {
  std::size_t n = 0;
  for (const auto& t : tallies_) n += t.violations;
  return n;
}

void CheckReport::merge(const CheckReport& other) {
  for (const auto& o : other.tallies_) {
    CheckTally& t = tally(o.name);
    t.instances += o.instances;
    t.violations += o.violations;
    for (const auto& w : o.witnesses) {
      if (t.witnesses.size() < CheckTally::kMaxWitnesses) t.witnesses.push_back(w);
    }
  }
}

std::string CheckReport::summary() const {
  std::ostringstream os;
  for (const auto& t : tallies_) {
    os << t.name << ": instances=" << t.instances << " violations=" << t.violations << '\n';
    for (const auto& w : t.witnesses) os << "  witness: " << w << '\n';
  }
  return os.str();
}

std::string ReportRecord::to_json() const {
  nlohmann::ordered_json j_obj;
  j_obj["tree"] = tree;
  j_obj["j"] = j ? nlohmann::ordered_json(*j) : nlohmann::ordered_json(nullptr);
  j_obj["check"] = check;
  j_obj["status"] = status;
  if (witness) j_obj["witness"] = *witness;
  return j_obj.dump();
}

}  // namespace critideals
