#pragma once
#include "qcore/channels.hpp"
#include "qcore/json_io.hpp"
#include "qcore/layout.hpp"
#include "qcore/linalg.hpp"
#include "qcore/objects.hpp"
#include "qcore/ops.hpp"
#include "qcore/random.hpp"
#include "qcore/standard.hpp"
