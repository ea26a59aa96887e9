#pragma once

#include "branching.hpp"
#include "complex_exact.hpp"
#include "connections.hpp"
#include "error.hpp"
#include "field.hpp"
#include "fuchs.hpp"
#include "moebius.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "schwarzian.hpp"
#include "series.hpp"
#include "torsor.hpp"
