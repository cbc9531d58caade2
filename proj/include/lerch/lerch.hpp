#pragma once

#include "lerch/branch.hpp"
#include "lerch/deformed.hpp"
#include "lerch/errors.hpp"
#include "lerch/exact.hpp"
#include "lerch/gamma.hpp"
#include "lerch/monodromy.hpp"
#include "lerch/phi.hpp"
#include "lerch/point.hpp"
#include "lerch/polynomial.hpp"
#include "lerch/quadrature.hpp"
#include "lerch/series.hpp"
#include "lerch/special.hpp"
#include "lerch/transport.hpp"
#include "lerch/verify.hpp"
#include "lerch/weyl.hpp"
#include "lerch/word.hpp"
