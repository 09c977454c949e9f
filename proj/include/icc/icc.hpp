#pragma once

#include "icc/bounds.hpp"
#include "icc/cli.hpp"
#include "icc/coloring.hpp"
#include "icc/constructions.hpp"
#include "icc/generators.hpp"
#include "icc/graph.hpp"
#include "icc/io.hpp"
#include "icc/metrics.hpp"
#include "icc/noncolorable.hpp"
#include "icc/solver.hpp"
#include "icc/tree_enum.hpp"
