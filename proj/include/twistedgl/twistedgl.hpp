#pragma once

#include "error.hpp"
#include "rational.hpp"
#include "partition.hpp"
#include "ffpoly.hpp"
#include "symcomb.hpp"
#include "cyclotomic.hpp"
#include "braidcoh.hpp"
#include "qlaurent.hpp"
#include "lseries.hpp"
#include "glcount.hpp"
#include "toristat.hpp"
#include "registry.hpp"
