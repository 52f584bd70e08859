#pragma once

#include "qdecomp/cycle_classes.hpp"
#include "qdecomp/cycle_decomp.hpp"
#include "qdecomp/decomposition.hpp"
#include "qdecomp/edge_color.hpp"
#include "qdecomp/errors.hpp"
#include "qdecomp/graph.hpp"
#include "qdecomp/hamilton.hpp"
#include "qdecomp/hamilton_decomp.hpp"
#include "qdecomp/io.hpp"
#include "qdecomp/matching.hpp"
#include "qdecomp/maxflow.hpp"
#include "qdecomp/orient.hpp"
#include "qdecomp/path_decomp.hpp"
#include "qdecomp/randgen.hpp"
#include "qdecomp/rng.hpp"
#include "qdecomp/sweep.hpp"
#include "qdecomp/verify.hpp"
