#pragma once

#include <string>
#include <vector>

namespace rectpark {

struct VerifyOptions {
  int max_semi = 12;        // largest m + n checked
  int max_semi_bijection = 10;
  int max_semi_bi = 8;      // bi-Frobenius oracle comparison
  int threads = 1;
};

struct CheckResult {
  std::string name;  // e.g. "frobenius(4,6) filter=returns=1,1"
  bool ok = true;
  std::string detail;
};

// Closed forms against brute-force enumeration for every (m, n) with
// m + n <= max_semi. Results come back in a fixed order regardless of
// the thread count.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

// Thread count from RECTPARK_THREADS, defaulting to 1.
int threads_from_env();

}  // namespace rectpark
