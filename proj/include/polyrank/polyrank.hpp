#pragma once

#include "polyrank/types.hpp"
#include "polyrank/matrix_polynomial.hpp"
#include "polyrank/pencil.hpp"
#include "polyrank/random.hpp"
#include "polyrank/rank.hpp"
#include "polyrank/minimal_indices.hpp"
#include "polyrank/multiplicities.hpp"
#include "polyrank/eigenstructure.hpp"
#include "polyrank/kcf.hpp"
#include "polyrank/recovery.hpp"
#include "polyrank/generic.hpp"
#include "polyrank/realize.hpp"
#include "polyrank/serialization.hpp"
#include "polyrank/reports.hpp"
