#pragma once

#include "graphfx/atomics.hpp"
#include "graphfx/bench/benchmark.hpp"
#include "graphfx/bench/graph_spec.hpp"
#include "graphfx/bench/mteps.hpp"
#include "graphfx/bench/report.hpp"
#include "graphfx/bench/run_stats.hpp"
#include "graphfx/frontier/frontier.hpp"
#include "graphfx/graph/build.hpp"
#include "graphfx/graph/coo_graph.hpp"
#include "graphfx/graph/csr_graph.hpp"
#include "graphfx/graph/generators.hpp"
#include "graphfx/graph/io.hpp"
#include "graphfx/load_balance/plan.hpp"
#include "graphfx/load_balance/strategy.hpp"
#include "graphfx/operators/advance.hpp"
#include "graphfx/operators/compute.hpp"
#include "graphfx/operators/filter.hpp"
#include "graphfx/operators/functors.hpp"
#include "graphfx/operators/intersect.hpp"
#include "graphfx/primitives/bc.hpp"
#include "graphfx/primitives/bfs.hpp"
#include "graphfx/primitives/cc.hpp"
#include "graphfx/primitives/pagerank.hpp"
#include "graphfx/primitives/sssp.hpp"
#include "graphfx/primitives/tc.hpp"
#include "graphfx/queue/near_far.hpp"
#include "graphfx/traversal/direction.hpp"
#include "graphfx/types.hpp"
