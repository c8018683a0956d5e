// Classical and categorical invariants of braid closures.
#ifndef KNOTCAT_INVARIANTS_HPP
#define KNOTCAT_INVARIANTS_HPP

#include "alexander.hpp"
#include "group.hpp"
#include "hc0.hpp"
#include "invariance.hpp"
#include "points.hpp"

#endif
