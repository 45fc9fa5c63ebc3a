#pragma once

// Umbrella header: exact minimax values, plays, and verification oracles
// for unconstrained online linear games.

#include "adversaries.hpp"
#include "benchmarks.hpp"
#include "engine.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "rademacher.hpp"
#include "strategies.hpp"
