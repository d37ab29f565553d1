#pragma once
#include "info/distance.hpp"
#include "info/entropy.hpp"
#include "info/op_distance.hpp"
#include "info/suite.hpp"
