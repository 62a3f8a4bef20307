#pragma once

#include "atlas.hpp"
#include "bitset.hpp"
#include "conditions.hpp"
#include "constructive.hpp"
#include "dense.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "instances.hpp"
#include "io.hpp"
#include "json.hpp"
#include "obstructions.hpp"
#include "oracle.hpp"
#include "random.hpp"
#include "search.hpp"
#include "solve.hpp"
#include "tree.hpp"
