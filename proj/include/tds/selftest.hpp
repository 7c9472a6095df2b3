#pragma once

#include <ostream>
#include <string>

namespace tds::selftest {

/// Run the embedded acceptance table: the reference evaluations, their
/// numerical cross-checks against partial summation, and the cocycle property
/// suite. Prints one [ok]/[FAIL] line per row (rows whose names do not contain
/// `filter` are skipped) and returns 0 iff everything passed.
int run(std::ostream& out, const std::string& filter = "");

}  // namespace tds::selftest
