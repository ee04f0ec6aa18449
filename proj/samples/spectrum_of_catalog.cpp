// Prints each small catalog Hoffman graph with its B matrix and smallest
// eigenvalue, and whether it clears -1-tau.

#include <iostream>

#include "hoffman/hoffman.hpp"

int main() {
  using namespace hoffman;
  const Threshold t = Threshold::minus_one_minus_tau();
  for (const char* name : {"H_I", "H_II", "H_III", "H_IV", "H_XVI", "H_XVII", "K1T(3)"}) {
    const auto g = std::get<HoffmanGraph>(catalog::lookup(name));
    const IntMatrix b = b_matrix(g);
    std::cout << name << "  " << to_compact(g) << "\n" << b.to_string();
    std::cout << "  char poly " << char_poly(b).to_string() << "\n";
    std::cout << "  lambda_min ~ " << lambda_min_approx(b) << ", >= -1-tau: " << (lambda_min_at_least(b, t) ? "yes" : "no")
              << "\n\n";
  }
}
