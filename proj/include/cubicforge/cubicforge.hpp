#pragma once

// Umbrella header for the whole library.

#include "cubicforge/errors.hpp"
#include "cubicforge/kernel/integer.hpp"
#include "cubicforge/kernel/interpolate.hpp"
#include "cubicforge/kernel/linalg.hpp"
#include "cubicforge/kernel/modular.hpp"
#include "cubicforge/kernel/multipoly.hpp"
#include "cubicforge/kernel/resultant.hpp"
#include "cubicforge/kernel/upoly.hpp"
#include "cubicforge/cfinite.hpp"
#include "cubicforge/quadform.hpp"
#include "cubicforge/cubic.hpp"
#include "cubicforge/forge.hpp"
#include "cubicforge/concoct.hpp"
#include "cubicforge/serialize.hpp"
#include "cubicforge/text.hpp"
