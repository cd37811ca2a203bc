#pragma once

// Convenience header pulling in the whole library.

#include "eca/claims.hpp"
#include "eca/commcomp.hpp"
#include "eca/core.hpp"
#include "eca/errors.hpp"
#include "eca/general_ca.hpp"
#include "eca/preimage.hpp"
#include "eca/problems.hpp"
#include "eca/protocols.hpp"
#include "eca/render.hpp"
