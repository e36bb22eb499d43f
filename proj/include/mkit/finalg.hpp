#ifndef MKIT_FINALG_HPP
#define MKIT_FINALG_HPP

#include "finalg/axiom_report.hpp"
#include "finalg/presentation.hpp"
#include "finalg/separability.hpp"

#endif  // MKIT_FINALG_HPP
