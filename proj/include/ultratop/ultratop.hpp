#pragma once

#include "ultratop/errors.hpp"
#include "ultratop/point_set.hpp"
#include "ultratop/ultracore.hpp"
#include "ultratop/fintop.hpp"
#include "ultratop/ringspec.hpp"
#include "ultratop/specz.hpp"
#include "ultratop/json_io.hpp"
