#pragma once

// Umbrella header: exact Gromov hyperbolicity for finite metric graphs and
// their weighted line graphs.

#include "hyperline/rational.hpp"
#include "hyperline/errors.hpp"
#include "hyperline/metric_graph.hpp"
#include "hyperline/geodesics.hpp"
#include "hyperline/thinness.hpp"
#include "hyperline/delta.hpp"
#include "hyperline/line_graph.hpp"
#include "hyperline/inequalities.hpp"
#include "hyperline/families.hpp"
#include "hyperline/io.hpp"
