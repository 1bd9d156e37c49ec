#pragma once

// Umbrella header.

#include "hyperlab/functionals.hpp"
#include "hyperlab/geometry.hpp"
#include "hyperlab/moser.hpp"
#include "hyperlab/nelder_mead.hpp"
#include "hyperlab/quadrature.hpp"
#include "hyperlab/radial_profile.hpp"
#include "hyperlab/serialize.hpp"
#include "hyperlab/sharp_constants.hpp"
#include "hyperlab/special_functions.hpp"
