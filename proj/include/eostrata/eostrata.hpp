#ifndef EOSTRATA_EOSTRATA_HPP
#define EOSTRATA_EOSTRATA_HPP

#include "core.hpp"
#include "rootdata.hpp"
#include "weyl.hpp"
#include "eo_order.hpp"
#include "siegel.hpp"
#include "affine.hpp"
#include "strata.hpp"
#include "io.hpp"

#endif
