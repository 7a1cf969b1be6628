#pragma once

#include "su3census/cache.hpp"
#include "su3census/fitstats.hpp"
#include "su3census/irreps.hpp"
#include "su3census/modcount.hpp"
#include "su3census/numbers.hpp"
#include "su3census/partitions.hpp"
#include "su3census/simplex.hpp"
