#ifndef MDIM_MDIM_HPP
#define MDIM_MDIM_HPP

#include "mdim/graph.hpp"
#include "mdim/graph6.hpp"
#include "mdim/resolve.hpp"
#include "mdim/treegen.hpp"
#include "mdim/structure.hpp"
#include "mdim/census.hpp"

#endif
