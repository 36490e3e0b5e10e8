#pragma once
// umbrella header

#include "step_function.hpp"
#include "rng.hpp"
#include "vn_algebra.hpp"
#include "spectral_model.hpp"
#include "operator_norms.hpp"
#include "groups.hpp"
#include "fourier.hpp"
#include "inequalities.hpp"
#include "spectral_asymptotics.hpp"
#include "serialization.hpp"
#include "suites.hpp"
