#pragma once

// Umbrella header.

#include "farsight/bench.hpp"
#include "farsight/farsighted_linear.hpp"
#include "farsight/farsighted_reference.hpp"
#include "farsight/gale_shapley.hpp"
#include "farsight/instance.hpp"
#include "farsight/oracle.hpp"
#include "farsight/ttc.hpp"
