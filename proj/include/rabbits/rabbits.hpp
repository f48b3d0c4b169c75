#pragma once

// Generalized Fibonacci numbers for rabbit populations that become fertile at
// age f and die at age d (possibly never). Four mutually verifying evaluation
// methods: literal simulation, two closed recurrences, and a fast
// characteristic-polynomial evaluator for huge indices.

#include "arith.hpp"
#include "core.hpp"
#include "fasteval.hpp"
#include "methods.hpp"
#include "recurrence.hpp"
#include "simulator.hpp"
