#pragma once

#include "acring/error.hpp"
#include "acring/units.hpp"
#include "acring/reduction.hpp"
#include "acring/ring.hpp"
#include "acring/spectral.hpp"
#include "acring/solver.hpp"
#include "acring/sweeps.hpp"
#include "acring/io.hpp"
