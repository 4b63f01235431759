#pragma once

#include "divlab/rational.hpp"
#include "divlab/exponents.hpp"
#include "divlab/f2_algebra.hpp"
#include "divlab/quadratic.hpp"
#include "divlab/kpoly.hpp"
#include "divlab/dk_domain.hpp"
#include "divlab/domain.hpp"
#include "divlab/predicates.hpp"
#include "divlab/random.hpp"
#include "divlab/report.hpp"
#include "divlab/witnesses.hpp"
#include "divlab/parser.hpp"
