#pragma once
#include "sim/absolutize.hpp"
#include "sim/lab.hpp"
#include "sim/result.hpp"
#include "sim/units.hpp"
