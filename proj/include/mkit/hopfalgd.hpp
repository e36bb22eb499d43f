#ifndef MKIT_HOPFALGD_HPP
#define MKIT_HOPFALGD_HPP

#include "hopfalgd/maschke.hpp"
#include "hopfalgd/presentation.hpp"
#include "hopfalgd/solvers.hpp"

#endif  // MKIT_HOPFALGD_HPP
