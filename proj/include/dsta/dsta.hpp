#pragma once

#include "annealing.hpp"
#include "bench.hpp"
#include "cluster_opt.hpp"
#include "instance.hpp"
#include "neighbors.hpp"
#include "operators.hpp"
#include "oracle.hpp"
#include "rng.hpp"
#include "solver.hpp"
#include "tour.hpp"
