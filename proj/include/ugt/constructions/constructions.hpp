#pragma once

#include "ugt/constructions/derived.hpp"
#include "ugt/constructions/families.hpp"
#include "ugt/constructions/rough.hpp"
#include "ugt/constructions/sampling.hpp"
#include "ugt/constructions/tolerance.hpp"
#include "ugt/constructions/variants.hpp"
