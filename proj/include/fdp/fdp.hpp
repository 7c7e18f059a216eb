#ifndef FDP_FDP_HPP
#define FDP_FDP_HPP

#include "fdp/analytic.hpp"
#include "fdp/bignat.hpp"
#include "fdp/digitcore.hpp"
#include "fdp/empirical.hpp"
#include "fdp/report.hpp"
#include "fdp/scenarios.hpp"
#include "fdp/sequences.hpp"

#endif  // FDP_FDP_HPP
