#ifndef BERNPART_REPORT_HPP
#define BERNPART_REPORT_HPP

#include <map>
#include <string>

namespace bernpart {

/// Structured pass/fail record emitted by every verifier. Exact checks
/// report residual "0" or the exact difference; numeric checks echo their
/// tolerance in params.
struct VerificationReport {
  std::string check;
  std::map<std::string, std::string> params;
  bool pass = false;
  std::string lhs;
  std::string rhs;
  std::string residual;
};

}  // namespace bernpart

#endif  // BERNPART_REPORT_HPP
