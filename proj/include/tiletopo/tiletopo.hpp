#pragma once

// Umbrella header for the tiletopo library: digital topology of locally
// finite plane tilings on finite combinatorial windows.

#include "tiletopo/cell.hpp"
#include "tiletopo/cell_set.hpp"
#include "tiletopo/error.hpp"
#include "tiletopo/tiling.hpp"
#include "tiletopo/generators.hpp"
#include "tiletopo/io.hpp"
#include "tiletopo/digital_space.hpp"
#include "tiletopo/jordan.hpp"
#include "tiletopo/curve_classes.hpp"
#include "tiletopo/analysis.hpp"
#include "tiletopo/sampler.hpp"
#include "tiletopo/selfcheck.hpp"
#include "tiletopo/svg.hpp"
