#pragma once

#include "topo/error.hpp"
#include "topo/simplex.hpp"
#include "topo/simplicial_complex.hpp"
#include "topo/cw_complex.hpp"
#include "topo/triangulate.hpp"
#include "topo/surface.hpp"
#include "topo/integer_matrix.hpp"
#include "topo/smith.hpp"
#include "topo/chain_complex.hpp"
#include "topo/lattice.hpp"
#include "topo/fundamental_group.hpp"
#include "topo/morse.hpp"
#include "topo/rotation_index.hpp"
#include "topo/io.hpp"
#include "topo/corpus.hpp"
