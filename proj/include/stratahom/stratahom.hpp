#pragma once

#include "combinatorics.hpp"
#include "posets.hpp"
#include "integer_linalg.hpp"
#include "chain_complex.hpp"
#include "spaces.hpp"
#include "stabilization.hpp"
