#pragma once

#include "groupcover/bitset.hpp"
#include "groupcover/cover.hpp"
#include "groupcover/errors.hpp"
#include "groupcover/expr.hpp"
#include "groupcover/group.hpp"
#include "groupcover/json_io.hpp"
#include "groupcover/lattice.hpp"
#include "groupcover/morphisms.hpp"
#include "groupcover/product_maximals.hpp"
#include "groupcover/subgroup.hpp"
#include "groupcover/theorem.hpp"
#include "groupcover/verify.hpp"
