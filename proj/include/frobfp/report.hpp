#ifndef FROBFP_REPORT_HPP
#define FROBFP_REPORT_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace frobfp {

/// Error with a machine-readable kind ("DimensionMismatch", "NotSplit", ...).
/// Thrown for violated preconditions; checks that *report* problems return a
/// CheckReport instead.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what) : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

struct Finding {
  std::string location;  // e.g. "assoc(1,2,3)", "block 2"
  std::string message;

  friend bool operator==(const Finding&, const Finding&) = default;
};

struct CheckReport {
  std::vector<Finding> findings;

  bool passed() const { return findings.empty(); }
  void add(std::string location, std::string message) {
    findings.push_back({std::move(location), std::move(message)});
  }
  void merge(const CheckReport& other) {
    findings.insert(findings.end(), other.findings.begin(), other.findings.end());
  }
};

}  // namespace frobfp

#endif  // FROBFP_REPORT_HPP
