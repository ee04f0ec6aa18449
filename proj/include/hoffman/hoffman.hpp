#pragma once

// Umbrella header for the library.

#include "hoffman/algebra.hpp"
#include "hoffman/census.hpp"
#include "hoffman/decomp.hpp"
#include "hoffman/enumerate.hpp"
#include "hoffman/format.hpp"
#include "hoffman/iso.hpp"
#include "hoffman/model.hpp"
#include "hoffman/qfamily.hpp"
#include "hoffman/spectral.hpp"
