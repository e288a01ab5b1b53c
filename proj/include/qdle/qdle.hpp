#pragma once

// Umbrella header for the whole library.

#include "qdle/closure.hpp"
#include "qdle/constructors.hpp"
#include "qdle/error.hpp"
#include "qdle/euler.hpp"
#include "qdle/finite_group.hpp"
#include "qdle/permutation.hpp"
#include "qdle/quandle.hpp"
#include "qdle/quandle_spec.hpp"
