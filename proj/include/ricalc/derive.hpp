#pragma once
#include "algebra.hpp"
#include "derive/axioms.hpp"
#include "derive/builtins.hpp"
#include "derive/checks.hpp"
#include "derive/proof.hpp"
#include "derive/rename.hpp"
#include "derive/rules.hpp"
