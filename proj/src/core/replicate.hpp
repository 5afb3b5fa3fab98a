#pragma once

#include <string>
#include <vector>

namespace freelip {

struct ReplicationRow {
  std::string name;
  bool pass;
  std::string detail;
};

// Reruns the bundled example computations (the gallery spaces, their moduli,
// distortions, norms and differentiability verdicts) against their expected
// values. Deterministic across runs and worker counts.
std::vector<ReplicationRow> run_replication(int jobs = 1);

}  // namespace freelip
