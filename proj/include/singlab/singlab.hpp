#pragma once

// Umbrella header: exact invariants of quasihomogeneous isolated
// hypersurface singularities plus the numeric fiber verifier.

#include "singlab/analysis.hpp"
#include "singlab/catalog.hpp"
#include "singlab/errors.hpp"
#include "singlab/fiber.hpp"
#include "singlab/groebner.hpp"
#include "singlab/milnor.hpp"
#include "singlab/monodromy.hpp"
#include "singlab/monomial.hpp"
#include "singlab/monomial_order.hpp"
#include "singlab/parallel.hpp"
#include "singlab/parser.hpp"
#include "singlab/polynomial.hpp"
#include "singlab/rational.hpp"
#include "singlab/spectrum.hpp"
#include "singlab/verdict.hpp"
#include "singlab/weights.hpp"
