#ifndef MKIT_HOPFCAT_HPP
#define MKIT_HOPFCAT_HPP

#include "hopfcat/presentation.hpp"
#include "hopfcat/solvers.hpp"

#endif  // MKIT_HOPFCAT_HPP
