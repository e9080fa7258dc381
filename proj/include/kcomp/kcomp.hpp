#pragma once

#include "kcomp/asymptotics.hpp"
#include "kcomp/composition.hpp"
#include "kcomp/enumerate.hpp"
#include "kcomp/exact.hpp"
#include "kcomp/numeric.hpp"
#include "kcomp/part_bound.hpp"
#include "kcomp/series.hpp"
#include "kcomp/tables.hpp"
