#pragma once

// Umbrella header: pulls in the whole library except the CLI driver
// (tools link that separately via gorstab/cli.hpp).

#include "gorstab/ehrhart.hpp"
#include "gorstab/errors.hpp"
#include "gorstab/g21.hpp"
#include "gorstab/graph.hpp"
#include "gorstab/halfspace.hpp"
#include "gorstab/lattice.hpp"
#include "gorstab/monomial.hpp"
#include "gorstab/polytope.hpp"
#include "gorstab/rational.hpp"
#include "gorstab/vertex_enum.hpp"
