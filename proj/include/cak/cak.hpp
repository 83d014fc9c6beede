#pragma once

#include "cak/bench.hpp"
#include "cak/generators.hpp"
#include "cak/graph.hpp"
#include "cak/io.hpp"
#include "cak/naive.hpp"
#include "cak/nd.hpp"
#include "cak/outcome.hpp"
#include "cak/parameters.hpp"
#include "cak/solver.hpp"
#include "cak/subset.hpp"
#include "cak/tree.hpp"
#include "cak/vc.hpp"
