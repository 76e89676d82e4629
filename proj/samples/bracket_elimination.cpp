// Builds Z_4(a,b,c,x,x), runs the column elimination and prints the
// factors whose product is the determinant.
#include <iostream>

#include "spiraldet/spiraldet.hpp"

int main() {
  using namespace spiraldet;
  const auto z = build_bracket(4, Horizontal::Tied);
  std::cout << to_latex(z) << "\n";

  const WedgeResult w = wedge_eliminate(z);
  std::cout << "sign: " << w.factorization.sign << "\n";
  std::cout << "corner: " << to_string(w.factorization.corner_factor) << "\n";
  for (const auto& f : w.factorization.antidiagonal_factors) {
    std::cout << "antidiagonal: " << to_string(f) << "\n";
  }
  const bool same = w.factorization.product() == det_cofactor(z);
  std::cout << "product equals determinant: " << (same ? "yes" : "no") << "\n";
  return same ? 0 : 1;
}
