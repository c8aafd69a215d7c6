#pragma once

#include "darboux/bessel_airy.hpp"
#include "darboux/parabolic_cylinder.hpp"
#include "darboux/polynomials.hpp"
#include "darboux/whittaker.hpp"
#include "darboux/xmath.hpp"
