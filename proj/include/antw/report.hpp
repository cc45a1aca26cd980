// Check reports: per-item status with a reproducible witness string on
// failure.  INCONCLUSIVE is reserved for window-bounded searches that
// exhausted their window without a verdict.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace antw {

enum class Status { PASS, FAIL, INCONCLUSIVE };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::PASS: return "PASS";
    case Status::FAIL: return "FAIL";
    default: return "INCONCLUSIVE";
  }
}

struct CheckItem {
  std::string name;
  Status status = Status::PASS;
  std::string detail;  // witness on FAIL, window description on INCONCLUSIVE
};

struct Report {
  std::vector<CheckItem> items;

  void add(const std::string& name, Status s, const std::string& detail = "") {
    items.push_back(CheckItem{name, s, detail});
  }
  void merge(const Report& r, const std::string& prefix = "") {
    for (auto& it : r.items) items.push_back(CheckItem{prefix + it.name, it.status, it.detail});
  }

  bool ok() const {
    for (auto& it : items)
      if (it.status != Status::PASS) return false;
    return true;
  }
  bool failed() const {
    for (auto& it : items)
      if (it.status == Status::FAIL) return true;
    return false;
  }
  Status aggregate() const {
    bool inc = false;
    for (auto& it : items) {
      if (it.status == Status::FAIL) return Status::FAIL;
      if (it.status == Status::INCONCLUSIVE) inc = true;
    }
    return inc ? Status::INCONCLUSIVE : Status::PASS;
  }
  std::string first_failure() const {
    for (auto& it : items)
      if (it.status == Status::FAIL) return it.name + ": " + it.detail;
    return "";
  }

  void print(std::ostream& os) const {
    for (auto& it : items) {
      os << "[" << status_name(it.status) << "] " << it.name;
      if (!it.detail.empty()) os << " -- " << it.detail;
      os << "\n";
    }
  }
};

}  // namespace antw
