#ifndef CNSS_CNSS_HPP
#define CNSS_CNSS_HPP

// Umbrella header for the Combinatorial Nullstellensatz toolkit.

#include "cnss/boolean_parity.hpp"
#include "cnss/chevalley.hpp"
#include "cnss/cli.hpp"
#include "cnss/cnss_core.hpp"
#include "cnss/common.hpp"
#include "cnss/exclusion.hpp"
#include "cnss/field.hpp"
#include "cnss/graph.hpp"
#include "cnss/parse.hpp"
#include "cnss/polynomial.hpp"
#include "cnss/report.hpp"
#include "cnss/verify.hpp"

#endif  // CNSS_CNSS_HPP
