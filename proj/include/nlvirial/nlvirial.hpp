#pragma once

#include "nlvirial/bratu.hpp"
#include "nlvirial/errors.hpp"
#include "nlvirial/linearize.hpp"
#include "nlvirial/oscillator.hpp"
#include "nlvirial/quadrature.hpp"
#include "nlvirial/roots.hpp"
#include "nlvirial/specfun.hpp"
#include "nlvirial/virial.hpp"
