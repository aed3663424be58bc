// Walks through the elimination by hand: builds M, prints it at the origin
// and at a user-chosen triple, and checks the witness conditions there.

#include <iostream>

#include "weilcert/weilcert.hpp"

int main() {
  using namespace weilcert;
  namespace model = weilcert::model;

  const auto elim = model::eliminate();
  std::cout << "M (gamma = M alpha), rows:\n";
  for (std::size_t r = 0; r < 6; ++r) {
    std::cout << "  " << elim.gamma_labels[r] << ":";
    for (const auto& e : elim.M.row(r)) std::cout << "  [" << e << "]";
    std::cout << "\n";
  }

  const Polynomial det = model::det_M(elim);
  std::cout << "det M has " << det.term_count() << " terms, value at the origin "
            << evaluate(det, model::CoefficientTriple::origin().point()) << "\n";

  const auto triple = model::CoefficientTriple::from_flat(
      std::array<Rational, 9>{1, 2, 3, -1, 0, 2, 1, 1, -2});
  const auto indep = model::independence_certificate(det, elim, triple);
  std::cout << "at " << triple.to_string() << ": det M = " << indep.value
            << ", quadric kernel dim = " << model::quadric_kernel_dimension(elim, triple)
            << ", fixed points: " << model::to_string(model::fixed_point_free_check(triple).verdict) << "\n";
  return 0;
}
