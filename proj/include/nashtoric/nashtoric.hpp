#pragma once

#include "nashtoric/cfrac.hpp"
#include "nashtoric/charts.hpp"
#include "nashtoric/classify.hpp"
#include "nashtoric/lattice.hpp"
#include "nashtoric/newton.hpp"
