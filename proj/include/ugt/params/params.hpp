#pragma once

#include "ugt/params/chromatic.hpp"
#include "ugt/params/domination.hpp"
#include "ugt/params/indices.hpp"
#include "ugt/params/planarity.hpp"
#include "ugt/params/result.hpp"
#include "ugt/params/selection.hpp"
#include "ugt/params/spectrum.hpp"
#include "ugt/params/treewidth.hpp"
