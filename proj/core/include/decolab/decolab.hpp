#pragma once

#include "decolab/asymptotics.hpp"
#include "decolab/error.hpp"
#include "decolab/linalg.hpp"
#include "decolab/propagators.hpp"
#include "decolab/spectral.hpp"
#include "decolab/superoperator.hpp"
#include "decolab/types.hpp"
#include "decolab/zassenhaus.hpp"
