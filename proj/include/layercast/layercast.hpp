#pragma once

// Umbrella header: exact-arithmetic analysis and bit-exact simulation of
// superposition-coded caching delivery over broadcast links with uneven
// per-user capacities.

#include "layercast/analysis.hpp"
#include "layercast/bigint.hpp"
#include "layercast/channel.hpp"
#include "layercast/combinat.hpp"
#include "layercast/errors.hpp"
#include "layercast/oracle.hpp"
#include "layercast/placement.hpp"
#include "layercast/prng.hpp"
#include "layercast/rational.hpp"
#include "layercast/scheduler.hpp"
#include "layercast/serialize.hpp"
#include "layercast/system.hpp"
