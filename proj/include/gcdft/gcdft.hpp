#pragma once

#include "gcdft/numeric.hpp"
#include "gcdft/core_arith.hpp"
#include "gcdft/arith_fn.hpp"
#include "gcdft/ramanujan.hpp"
#include "gcdft/gcd_dft.hpp"
#include "gcdft/table.hpp"
#include "gcdft/verify.hpp"
#include "gcdft/bench.hpp"
