#pragma once

#include "twistchar/abelian.hpp"
#include "twistchar/braiding_character.hpp"
#include "twistchar/chromatic.hpp"
#include "twistchar/errors.hpp"
#include "twistchar/exterior.hpp"
#include "twistchar/graded_dim.hpp"
#include "twistchar/json_io.hpp"
#include "twistchar/loop_space.hpp"
#include "twistchar/numeric.hpp"
#include "twistchar/partition.hpp"
#include "twistchar/series.hpp"
#include "twistchar/signed_unit.hpp"
#include "twistchar/tensor_oracle.hpp"
#include "twistchar/twist.hpp"
