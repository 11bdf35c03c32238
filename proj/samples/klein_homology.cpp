// Integral homology of a Klein bottle triangulation, straight from the Smith
// form and again from a greedy gradient field.

#include <iostream>

#include "topo/topo.hpp"

int main() {
  auto k = topo::klein_bottle_triangulation();
  std::cout << "c = " << topo::c_vector(k).to_string() << "\n";
  std::cout << "surface: " << topo::surface_name(topo::classify_surface(k)) << "\n";
  std::cout << topo::format_homology(topo::homology_groups(topo::chain_complex_from_simplicial(k)));

  auto lattice = topo::CellLattice::from_simplicial(k);
  auto field = topo::greedy_matching(lattice);
  auto morse = topo::morse_chain_complex(field, lattice);
  std::cout << "critical cells per dimension:";
  for (const auto& layer : morse.critical) std::cout << ' ' << layer.size();
  std::cout << "\n" << topo::format_homology(topo::homology_groups(morse.chain));
}
