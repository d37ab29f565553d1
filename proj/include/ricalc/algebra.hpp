#pragma once
#include "algebra/atom.hpp"
#include "algebra/certify.hpp"
#include "algebra/coefficient.hpp"
#include "algebra/context.hpp"
#include "algebra/evaluate.hpp"
#include "algebra/expr.hpp"
#include "algebra/parser.hpp"
#include "algebra/rational.hpp"
#include "algebra/ri.hpp"
#include "algebra/symbol.hpp"
