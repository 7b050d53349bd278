#pragma once

// Umbrella header: the whole library is header-only.

#include "lsc/checker.hpp"
#include "lsc/cli.hpp"
#include "lsc/config.hpp"
#include "lsc/correspondence.hpp"
#include "lsc/distance.hpp"
#include "lsc/errors.hpp"
#include "lsc/format.hpp"
#include "lsc/interval.hpp"
#include "lsc/report.hpp"
#include "lsc/rng.hpp"
#include "lsc/sample.hpp"
#include "lsc/seq.hpp"
#include "lsc/version.hpp"
#include "lsc/witness.hpp"
