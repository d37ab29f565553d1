#pragma once
#include "tradeoff/bijection.hpp"
#include "tradeoff/evaluate.hpp"
#include "tradeoff/io.hpp"
#include "tradeoff/optimize.hpp"
#include "tradeoff/region.hpp"
