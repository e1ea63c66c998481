#pragma once

#include "bounds.hpp"
#include "combinatorics.hpp"
#include "diophantine.hpp"
#include "modular.hpp"
#include "multiplicity.hpp"
#include "natural.hpp"
#include "report.hpp"
