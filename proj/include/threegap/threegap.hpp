#pragma once

#include "threegap/angle.hpp"
#include "threegap/decimal.hpp"
#include "threegap/errors.hpp"
#include "threegap/field_value.hpp"
#include "threegap/gaps.hpp"
#include "threegap/integer.hpp"
#include "threegap/oracle.hpp"
#include "threegap/render.hpp"
#include "threegap/report.hpp"
#include "threegap/sweep.hpp"
