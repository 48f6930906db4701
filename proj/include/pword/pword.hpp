#pragma once

#include "pword/checked.hpp"
#include "pword/constructions.hpp"
#include "pword/continued_fraction.hpp"
#include "pword/errors.hpp"
#include "pword/farey.hpp"
#include "pword/fraction.hpp"
#include "pword/oracle.hpp"
#include "pword/partial_word.hpp"
#include "pword/piecewise.hpp"
#include "pword/piecewise_io.hpp"
#include "pword/sturmian.hpp"
#include "pword/thresholds.hpp"
