#pragma once

// Umbrella header: the whole library, minus the CLI glue.

#include "hi028/algnum.hpp"
#include "hi028/forward.hpp"
#include "hi028/generators.hpp"
#include "hi028/geom.hpp"
#include "hi028/pairs.hpp"
#include "hi028/render.hpp"
#include "hi028/tangents.hpp"
#include "hi028/version.hpp"
