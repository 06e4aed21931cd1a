#pragma once

// Umbrella header for the realroots library.

#include "realroots/rational.hpp"
#include "realroots/dyadic.hpp"
#include "realroots/extended.hpp"
#include "realroots/unipoly.hpp"
#include "realroots/sturm.hpp"
#include "realroots/isolate.hpp"
#include "realroots/hurwitz.hpp"
#include "realroots/monomial.hpp"
#include "realroots/multipoly.hpp"
#include "realroots/groebner.hpp"
#include "realroots/quotient_ring.hpp"
#include "realroots/matrix.hpp"
#include "realroots/zerodim.hpp"
#include "realroots/rur.hpp"
#include "realroots/parse.hpp"
