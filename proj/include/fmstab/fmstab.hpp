#pragma once

#include "rational.hpp"
#include "field.hpp"
#include "cohlattice.hpp"
#include "fmtransform.hpp"
#include "poly2.hpp"
#include "angle.hpp"
#include "stability.hpp"
#include "transformlaw.hpp"
#include "scan.hpp"
#include "emit.hpp"
#include "config.hpp"
#include "random.hpp"
#include "verify.hpp"
