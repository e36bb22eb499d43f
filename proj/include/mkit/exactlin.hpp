#ifndef MKIT_EXACTLIN_HPP
#define MKIT_EXACTLIN_HPP

#include "exactlin/field.hpp"
#include "exactlin/matrix.hpp"
#include "exactlin/system.hpp"

#endif  // MKIT_EXACTLIN_HPP
