#pragma once

#include "minkarr/scalar.hpp"
#include "minkarr/vector.hpp"
#include "minkarr/lp.hpp"
#include "minkarr/body.hpp"
#include "minkarr/arrangement.hpp"
#include "minkarr/parallel.hpp"
#include "minkarr/lifting.hpp"
#include "minkarr/polytope.hpp"
#include "minkarr/packing.hpp"
#include "minkarr/kdistance.hpp"
#include "minkarr/search.hpp"
#include "minkarr/io.hpp"
#include "minkarr/svg.hpp"
