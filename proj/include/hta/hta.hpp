#pragma once

#include "hta/checker.hpp"
#include "hta/current.hpp"
#include "hta/errors.hpp"
#include "hta/json_io.hpp"
#include "hta/linalg.hpp"
#include "hta/nary.hpp"
#include "hta/operad.hpp"
#include "hta/permutation.hpp"
#include "hta/rational.hpp"
#include "hta/table.hpp"
#include "hta/tensor.hpp"
