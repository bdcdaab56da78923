// Pull 2x2 matrices over a twisted polynomial algebra back along Delta and
// compare with their product.

#include <iostream>

#include "homalg/homalg.hpp"

int main() {
  using namespace homalg;
  const auto line = q_twisted_line(2);
  const MatrixAlgebra<Twisted<PolyAlgebra>> m2(line);
  const auto pairs = random_matrix_pairs(line, 3, 11);
  for (const auto& [x, y] : pairs) {
    std::cout << m2.describe(x) << " * " << m2.describe(y) << "\n  = " << m2.describe(m2.mul(x, y)) << "\n";
  }
  const CheckReport r = representability_check(line, random_matrix_pairs(line, 50, 7), 7);
  std::cout << r.law << " over " << line.name() << ": " << (r.passed() ? "pass" : "FAIL") << " on "
            << r.samples_run << " pairs\n";
  return r.passed() ? 0 : 1;
}
