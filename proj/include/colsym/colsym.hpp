#pragma once

// Umbrella header for the colsym library.

#include "colsym/errors.hpp"
#include "colsym/expr_io.hpp"
#include "colsym/formal_geometry.hpp"
#include "colsym/matrix_ring.hpp"
#include "colsym/polynomial.hpp"
#include "colsym/rational.hpp"
#include "colsym/rowsum_iso.hpp"
#include "colsym/selftest.hpp"
#include "colsym/variables.hpp"
