// Builds the five-qubit ring, finds its best distance-3 code and prints the
// codewords and stabilizer.

#include <iostream>

#include "qgc/qgc.hpp"

int main() {
  const auto g = qgc::build_family(qgc::Family::kCycle, 5, 2);
  const auto result = qgc::search_code(g, 3);
  const auto& code = result.code;
  std::cout << "((5, " << code.K() << ", 3))_2 on the 5-cycle\n";
  for (const auto& c : code.codewords()) std::cout << "  |" << c.to_digits() << ">\n";

  const auto stab = qgc::stabilizer_subgroup(code);
  std::cout << "stabilizer order " << stab.order << "\n";
  for (std::size_t i = 0; i < stab.elements.size(); ++i) {
    std::cout << "  " << stab.tuples[i].to_digits() << "  " << qgc::to_string(stab.elements[i]) << "\n";
  }
  const auto check = qgc::verify_stabilizer(code, stab);
  std::cout << (check.pass ? "stabilizer verified\n" : "stabilizer check failed\n");
  return check.pass ? 0 : 1;
}
