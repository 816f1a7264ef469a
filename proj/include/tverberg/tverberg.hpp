#pragma once

#include "tverberg/rational.hpp"
#include "tverberg/errors.hpp"
#include "tverberg/kernel.hpp"
#include "tverberg/combinatorics.hpp"
#include "tverberg/circle_solver.hpp"
#include "tverberg/oracle.hpp"
#include "tverberg/dual_lines.hpp"
#include "tverberg/verify3d.hpp"
#include "tverberg/counterexamples.hpp"
#include "tverberg/io/instance_file.hpp"
#include "tverberg/io/generate.hpp"
#include "tverberg/io/svg.hpp"
#include "tverberg/io/trace.hpp"
