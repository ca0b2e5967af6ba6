#pragma once

// Umbrella header.

#include "septica/cache.hpp"
#include "septica/checks.hpp"
#include "septica/closed_forms.hpp"
#include "septica/cubic.hpp"
#include "septica/errors.hpp"
#include "septica/invariants.hpp"
#include "septica/real.hpp"
#include "septica/report.hpp"
#include "septica/septic.hpp"
#include "septica/special.hpp"
#include "septica/theta.hpp"
#include "septica/verification.hpp"
