#ifndef ACRI_REPORT_HPP
#define ACRI_REPORT_HPP

#include <string>
#include <vector>

namespace acri {

/// Verdict of one law check. A failing report carries a witness whose
/// re-evaluation reproduces the violation (up to 1e-12).
struct CheckReport {
  std::string law;
  bool pass = true;
  double worst_violation = 0.0;
  std::vector<double> witness;  // coordinates of the worst point, if any
  std::string witness_note;     // human-readable context (instance, element)
  std::string grid;
  double tolerance = 0.0;
  unsigned long long seed = 0;  // nonzero when randomized instances were used

  /// One CSV line: law,verdict,worst_violation,witness
  std::string csv_line() const;
};

}  // namespace acri

#endif
