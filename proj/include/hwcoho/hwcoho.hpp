#pragma once

#include "hwcoho/dict.hpp"
#include "hwcoho/f2.hpp"
#include "hwcoho/hw_matrix.hpp"
#include "hwcoho/canonical.hpp"
#include "hwcoho/enumerate.hpp"
#include "hwcoho/cohomology.hpp"
#include "hwcoho/reconstruct.hpp"
#include "hwcoho/verify.hpp"
#include "hwcoho/json_io.hpp"
