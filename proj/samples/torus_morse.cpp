// Discrete Morse function on the nine-square torus: critical cells, the two
// cancelling gradient paths, and Morse homology.

#include <iostream>

#include "topo/topo.hpp"

int main() {
  auto torus = topo::torus_rcc();
  auto lattice = topo::CellLattice::from_rcc(torus);
  auto f = topo::torus_morse_function(torus);

  for (const auto& c : topo::critical_cells(f, lattice))
    std::cout << "critical " << c.index << "-cell " << torus.label(c.id) << "\n";

  auto field = topo::gradient_field_of(f, lattice);
  auto edge = *torus.find_cell(1, {1, 2});
  for (const auto& path : topo::enumerate_paths(field, lattice, *torus.find_cell(2, {5, 6, 7, 8}), edge)) {
    std::cout << (path.sign > 0 ? "+ " : "- ");
    for (auto id : path.cells) std::cout << torus.label(id) << ' ';
    std::cout << "\n";
  }

  auto morse = topo::morse_chain_complex(field, lattice);
  std::cout << topo::format_homology(topo::homology_groups(morse.chain));
}
