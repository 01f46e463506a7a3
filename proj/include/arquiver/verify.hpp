#pragma once

#include <cstdint>
#include <ostream>

#include "arquiver/derived.hpp"
#include "arquiver/oracle.hpp"

namespace arq {

struct VerifyOptions {
  int trials = 500;
  std::uint64_t seed = 7;
  int max_ss = 4;
};

// Cross-checks the combinatorial answers against the grid oracle on random
// instances; prints one line per suite, returns false on any disagreement.
bool run_verify(const VerifyOptions& opt, std::ostream& out);

}  // namespace arq
