// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "scatter/amplitude.hpp"
#include "scatter/errors.hpp"
#include "scatter/kinematics.hpp"
#include "scatter/matrix_dump.hpp"
#include "scatter/smatrix.hpp"
#include "scatter/so31.hpp"
#include "scatter/specfun.hpp"
