#pragma once

#include "gfd/specfun.hpp"
#include "gfd/polynomial.hpp"
#include "gfd/differentiable.hpp"
#include "gfd/operators.hpp"
#include "gfd/ode.hpp"
#include "gfd/reference_tables.hpp"
#include "gfd/report.hpp"
#include "gfd/verify.hpp"
