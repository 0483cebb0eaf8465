#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace stabres {

// Outcome of one verification pass.  Findings describe individual
// violations; an empty list with pass == true means everything checked out.
struct CheckReport {
  CheckReport() = default;
  explicit CheckReport(std::string report_name) : name(std::move(report_name)) {}

  std::string name;
  bool pass = true;
  std::size_t checked = 0;
  std::vector<std::string> findings;

  void fail(std::string what) {
    pass = false;
    findings.push_back(std::move(what));
  }
};

}  // namespace stabres
