#pragma once

#include "surfbasis/basis.hpp"
#include "surfbasis/bounds.hpp"
#include "surfbasis/cut_polygon.hpp"
#include "surfbasis/edge_vector.hpp"
#include "surfbasis/embedding.hpp"
#include "surfbasis/error.hpp"
#include "surfbasis/graph.hpp"
#include "surfbasis/io.hpp"
#include "surfbasis/oracle.hpp"
#include "surfbasis/random_embedding.hpp"
#include "surfbasis/three_basis.hpp"
