#pragma once

// Convenience umbrella: everything except the CLI driver.

#include "orbitlattice/centralizer.hpp"
#include "orbitlattice/errors.hpp"
#include "orbitlattice/intersections.hpp"
#include "orbitlattice/involutions.hpp"
#include "orbitlattice/io.hpp"
#include "orbitlattice/parallel.hpp"
#include "orbitlattice/rank_matrix.hpp"
#include "orbitlattice/rs_cells.hpp"
#include "orbitlattice/tableaux.hpp"
#include "orbitlattice/verify.hpp"
