#pragma once

#include "linrel/contiguous.hpp"
#include "linrel/error.hpp"
#include "linrel/exactcore.hpp"
#include "linrel/families.hpp"
#include "linrel/hyper.hpp"
#include "linrel/lincoef.hpp"
#include "linrel/numquad.hpp"
#include "linrel/oracle.hpp"
#include "linrel/poly.hpp"
#include "linrel/rational.hpp"
