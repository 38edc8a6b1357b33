#pragma once

#include "torusquake/charvar.hpp"
#include "torusquake/chgcoords.hpp"
#include "torusquake/coords.hpp"
#include "torusquake/errors.hpp"
#include "torusquake/f2words.hpp"
#include "torusquake/families.hpp"
#include "torusquake/numeric.hpp"
#include "torusquake/quake.hpp"
#include "torusquake/rep.hpp"
