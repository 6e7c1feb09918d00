#pragma once

#include "quadmaps/errors.hpp"
#include "quadmaps/exactnum.hpp"
#include "quadmaps/families.hpp"
#include "quadmaps/invariants.hpp"
#include "quadmaps/poly.hpp"
#include "quadmaps/projmap.hpp"
#include "quadmaps/reduction.hpp"
#include "quadmaps/structures.hpp"
#include "quadmaps/sunit.hpp"
