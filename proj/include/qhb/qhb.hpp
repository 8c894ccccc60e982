#pragma once

#include "qhb/exact.hpp"
#include "qhb/krawtchouk.hpp"
#include "qhb/linearization.hpp"
#include "qhb/enumerators.hpp"
#include "qhb/lp_bound.hpp"
#include "qhb/hamming_witness.hpp"
