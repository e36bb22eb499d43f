#ifndef MKIT_WEAKHOPF_HPP
#define MKIT_WEAKHOPF_HPP

#include "weakhopf/integrals.hpp"
#include "weakhopf/maschke.hpp"
#include "weakhopf/presentation.hpp"
#include "weakhopf/structure.hpp"

#endif  // MKIT_WEAKHOPF_HPP
