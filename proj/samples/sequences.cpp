// Prints determinants of the inward and outward numbered spirals next to
// the brute-force values.
#include <iostream>

#include "spiraldet/spiraldet.hpp"

int main() {
  using namespace spiraldet;
  bool ok = true;
  for (auto id : {SequenceId::InwardSpiral, SequenceId::OutwardSpiral}) {
    std::cout << sequence_name(id) << "\n";
    const auto rows = sequence_table(id, 12);
    std::cout << sequence_csv(rows);
    for (const auto& r : rows) ok = ok && r.match;
  }
  return ok ? 0 : 1;
}
