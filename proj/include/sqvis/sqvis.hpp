#pragma once

// Umbrella header for the full library.

#include "sqvis/errors.hpp"
#include "sqvis/generate.hpp"
#include "sqvis/geometry.hpp"
#include "sqvis/io.hpp"
#include "sqvis/ranking.hpp"
#include "sqvis/rational.hpp"
#include "sqvis/rng.hpp"
#include "sqvis/svg.hpp"
#include "sqvis/verify.hpp"
#include "sqvis/visibility.hpp"
