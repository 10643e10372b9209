#pragma once

#include <string>

namespace curvecount {

enum class CheckStatus { Pass, Fail, Skip };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  std::string graph;
  CheckStatus status = CheckStatus::Skip;
  std::string lhs;
  std::string rhs;
  /// Rendering of lhs - rhs (or of the stated discrepancy measure); "0" on a pass.
  std::string diff;
  double elapsed_ms = 0;
  /// Skip reason or extra context.
  std::string detail;
};

/// Pass iff lhs - rhs is zero. T needs subtraction, is_zero() and render().
template <class T>
CheckResult compare_values(std::string name, const T& lhs, const T& rhs) {
  CheckResult r;
  r.name = std::move(name);
  const T diff = lhs - rhs;
  r.lhs = lhs.render();
  r.rhs = rhs.render();
  r.diff = diff.render();
  r.status = diff.is_zero() ? CheckStatus::Pass : CheckStatus::Fail;
  return r;
}

}  // namespace curvecount
