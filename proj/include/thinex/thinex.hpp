#ifndef THINEX_THINEX_HPP
#define THINEX_THINEX_HPP

#include "thinex/distributions.hpp"
#include "thinex/ensembles.hpp"
#include "thinex/extreme_laws.hpp"
#include "thinex/free_max.hpp"
#include "thinex/mc_lab.hpp"
#include "thinex/order_stats.hpp"
#include "thinex/pot.hpp"
#include "thinex/quadrature.hpp"
#include "thinex/special.hpp"

#endif // THINEX_THINEX_HPP
