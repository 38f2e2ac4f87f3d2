#ifndef SEMIDOM_SEMIDOM_HPP
#define SEMIDOM_SEMIDOM_HPP

#include "semidom/poly.hpp"
#include "semidom/verdict.hpp"
#include "semidom/numutil.hpp"
#include "semidom/instance.hpp"
#include "semidom/localization.hpp"
#include "semidom/kronecker.hpp"
#include "semidom/sampling.hpp"
#include "semidom/primes.hpp"
#include "semidom/ideal.hpp"
#include "semidom/polyloc.hpp"
#include "semidom/factor.hpp"
#include "semidom/suites.hpp"

#endif  // SEMIDOM_SEMIDOM_HPP
