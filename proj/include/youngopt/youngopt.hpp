#pragma once

#include "core.hpp"
#include "error.hpp"
#include "funcspec.hpp"
#include "oracle.hpp"
#include "solve_result.hpp"
#include "solver.hpp"
