#pragma once

#include "ctm/sequence.hpp"
#include "ctm/cartesian_tree.hpp"
#include "ctm/representations.hpp"
#include "ctm/window.hpp"
#include "ctm/matchers.hpp"
#include "ctm/swap_graph.hpp"
#include "ctm/automaton.hpp"
#include "ctm/oracle.hpp"
#include "ctm/io.hpp"
#include "ctm/bench.hpp"
