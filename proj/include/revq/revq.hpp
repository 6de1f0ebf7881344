#pragma once

// Mixed-radix reversible circuit toolkit: index arithmetic, permutation
// gates, dense complex operators, the reversible embedding of irreversible
// functions, exhaustive gate searches, and circuit simulation.

#include "revq/circuit.hpp"
#include "revq/claims.hpp"
#include "revq/embedding.hpp"
#include "revq/enumeration.hpp"
#include "revq/gates.hpp"
#include "revq/matrix.hpp"
#include "revq/permutation.hpp"
#include "revq/radix.hpp"
#include "revq/truth_table.hpp"
