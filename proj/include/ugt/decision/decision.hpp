#pragma once

#include "ugt/decision/anp.hpp"
#include "ugt/decision/fcm.hpp"
