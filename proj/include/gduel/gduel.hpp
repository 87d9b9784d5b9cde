#pragma once

// Umbrella header for the Galois duel library.

#include "gduel/beta.hpp"
#include "gduel/duel.hpp"
#include "gduel/format.hpp"
#include "gduel/isolate.hpp"
#include "gduel/polynomial.hpp"
#include "gduel/rational.hpp"
#include "gduel/rng.hpp"
#include "gduel/sign.hpp"
#include "gduel/simulate.hpp"
#include "gduel/thresholds.hpp"
#include "gduel/thue_morse.hpp"
