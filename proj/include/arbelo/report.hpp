#pragma once

#include <string>
#include <vector>

#include "arbelo/arbelos.hpp"

namespace arbelo {

/// JSON document for a batch of verification reports. Fixed key order,
/// shortest round-trip number formatting, LF line endings.
std::string write_report(const std::vector<VerificationReport>& reports,
                         double r1, double r2, const Tolerance& tol);

}  // namespace arbelo
