#pragma once

// Umbrella header for the local-max hypergraph matching library.

#include "hlm/common.hpp"
#include "hlm/exact.hpp"
#include "hlm/generators.hpp"
#include "hlm/hypergraph.hpp"
#include "hlm/io.hpp"
#include "hlm/line_graph.hpp"
#include "hlm/local_max_par.hpp"
#include "hlm/local_max_seq.hpp"
#include "hlm/luby.hpp"
#include "hlm/matching.hpp"
#include "hlm/parallel.hpp"
#include "hlm/weight_stream.hpp"
