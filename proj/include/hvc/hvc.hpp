// Convenience umbrella for the whole library.

#pragma once

#include "hvc/contribution.hpp"
#include "hvc/core.hpp"
#include "hvc/exact.hpp"
#include "hvc/experiment.hpp"
#include "hvc/generate.hpp"
#include "hvc/indicators.hpp"
#include "hvc/io.hpp"
#include "hvc/metrics.hpp"
#include "hvc/rng.hpp"
#include "hvc/scalarize.hpp"
