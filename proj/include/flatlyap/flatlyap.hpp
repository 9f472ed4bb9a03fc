#pragma once

#include "components.hpp"
#include "enumeration.hpp"
#include "error.hpp"
#include "moduli.hpp"
#include "orbit.hpp"
#include "origami.hpp"
#include "permutation.hpp"
#include "rational.hpp"
