// Enumerates the exceptional signed graphs on at most 5 vertices and lists
// the Hoffman graphs realizing each one.

#include <iostream>

#include "hoffman/hoffman.hpp"

int main() {
  using namespace hoffman;
  EnumerateOptions o;
  o.max_n = 5;
  o.forbidden = {{"T1", catalog::t1()}};
  const auto exceptional = exceptional_graphs(enumerate_signed(o));
  for (const auto& e : exceptional.all()) {
    const auto reals = realize_hoffman(e.graph);
    std::cout << e.name << "  " << to_compact(e.graph) << "  realizations: " << reals.size() << "\n";
    for (const auto& g : reals) std::cout << "    " << to_compact(g) << "\n";
  }
}
