#pragma once

// Umbrella header.

#include "vermaband/rational.hpp"
#include "vermaband/polynomial.hpp"
#include "vermaband/ratfunc.hpp"
#include "vermaband/weight.hpp"
#include "vermaband/band_operator.hpp"
#include "vermaband/defect.hpp"
#include "vermaband/berezin.hpp"
#include "vermaband/conformal.hpp"
#include "vermaband/quantize.hpp"
#include "vermaband/expr.hpp"
#include "vermaband/suites.hpp"
#include "vermaband/report.hpp"
