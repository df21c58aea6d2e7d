#pragma once

#include "rank3/classifier.hpp"
#include "rank3/error.hpp"
#include "rank3/families.hpp"
#include "rank3/finite_field.hpp"
#include "rank3/graph.hpp"
#include "rank3/number_theory.hpp"
#include "rank3/zn_action.hpp"
