#pragma once

#include "spiraldet/closed_forms.hpp"
#include "spiraldet/determinant.hpp"
#include "spiraldet/errors.hpp"
#include "spiraldet/exponent.hpp"
#include "spiraldet/funceq.hpp"
#include "spiraldet/identities.hpp"
#include "spiraldet/laurent.hpp"
#include "spiraldet/matrix.hpp"
#include "spiraldet/random.hpp"
#include "spiraldet/rational.hpp"
#include "spiraldet/reduction.hpp"
#include "spiraldet/sequences.hpp"
#include "spiraldet/serialize.hpp"
#include "spiraldet/spiral.hpp"
#include "spiraldet/verify.hpp"
#include "spiraldet/wedge.hpp"
