#ifndef LRSNC_LRSNC_HPP
#define LRSNC_LRSNC_HPP

#include "lrsnc/errors.hpp"
#include "lrsnc/matrix.hpp"
#include "lrsnc/gf.hpp"
#include "lrsnc/skewpoly.hpp"
#include "lrsnc/sumrank.hpp"
#include "lrsnc/lrs.hpp"
#include "lrsnc/constraints.hpp"
#include "lrsnc/construct.hpp"
#include "lrsnc/netsim.hpp"

#endif  // LRSNC_LRSNC_HPP
