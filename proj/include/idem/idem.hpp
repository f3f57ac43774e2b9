#pragma once

#include "idem/boolean.hpp"
#include "idem/error.hpp"
#include "idem/functionals.hpp"
#include "idem/io.hpp"
#include "idem/order.hpp"
#include "idem/random.hpp"
#include "idem/report.hpp"
#include "idem/scalar.hpp"
#include "idem/selftest.hpp"
#include "idem/semialgebra.hpp"
#include "idem/semimodule.hpp"
#include "idem/semiring.hpp"
