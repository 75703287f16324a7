#pragma once

#include "logleg/analysis.hpp"
#include "logleg/errors.hpp"
#include "logleg/exact_moments.hpp"
#include "logleg/legendre.hpp"
#include "logleg/oracles.hpp"
#include "logleg/order.hpp"
#include "logleg/rational.hpp"
#include "logleg/verification.hpp"
