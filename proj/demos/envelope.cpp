// Build the bounded envelope of a twisted 2-dim Hom-Lie algebra and reduce
// a few elements in it.

#include <iostream>

#include "homalg/homalg.hpp"

int main() {
  using namespace homalg;
  HomLieAlgebra lie = HomLieAlgebra::standard(2);
  lie.set_bracket(0, 1, {0, 1});
  const HomLieAlgebra twisted = twist_lie(lie, {{1, 1}, {0, 2}});
  std::cout << "[e1, e2] = " << twisted.describe(twisted.structure(0, 1)) << "\n";

  const EnvelopeModel u = envelope(twisted, Bound{3, 0});
  const LinComb e1 = u.leaf(0), e2 = u.leaf(1);
  const LinComb commutator = mul(e1, e2) - mul(e2, e1);
  std::cout << to_string(commutator) << "  ~>  " << to_string(u.reduce(commutator)) << "\n";
  for (const auto& [arity, dim] : u.residual_dimensions()) {
    std::cout << "arity " << arity << ": " << dim << " residual terms\n";
  }

  const SuiteReport s = check_envelope_bialgebra(twisted, Bound{3, 0});
  std::cout << to_text(s);
  return s.passed() ? 0 : 1;
}
