#ifndef HOMLIE_REPORT_HPP
#define HOMLIE_REPORT_HPP

#include <string>
#include <vector>

namespace homlie {

struct CheckItem {
  std::string anchor;  // formula-style key of the verified identity
  bool pass = false;
  std::string detail;       // basis indices and exact residual on failure
  bool hypothesis = false;  // unmet hypotheses are reported, not failed
};

struct CheckReport {
  std::vector<CheckItem> items;

  void add(std::string anchor, bool pass, std::string detail = "") {
    items.push_back({std::move(anchor), pass, std::move(detail), false});
  }
  void add_hypothesis(std::string anchor, bool met, std::string detail = "") {
    items.push_back({std::move(anchor), met, std::move(detail), true});
  }
  /// No falsified identity (unmet hypotheses do not count).
  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass && !it.hypothesis) return false;
    return true;
  }
  bool hypotheses_met() const {
    for (const auto& it : items)
      if (it.hypothesis && !it.pass) return false;
    return true;
  }
  const CheckItem* first_failure() const {
    for (const auto& it : items)
      if (!it.pass && !it.hypothesis) return &it;
    return nullptr;
  }
  void merge(const CheckReport& other) {
    items.insert(items.end(), other.items.begin(), other.items.end());
  }
};

}  // namespace homlie

#endif
