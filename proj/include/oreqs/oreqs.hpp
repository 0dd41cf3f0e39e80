#pragma once

#include "oreqs/common.hpp"
#include "oreqs/diagonalize.hpp"
#include "oreqs/fields.hpp"
#include "oreqs/fixtures.hpp"
#include "oreqs/idemgen.hpp"
#include "oreqs/matrix.hpp"
#include "oreqs/ore_poly.hpp"
#include "oreqs/ore_ring.hpp"
#include "oreqs/sampling.hpp"
#include "oreqs/textio.hpp"
