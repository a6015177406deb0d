#ifndef FORMAL_RINGS_FORMAL_RINGS_HPP
#define FORMAL_RINGS_FORMAL_RINGS_HPP

#include "formal_rings/catalog.hpp"
#include "formal_rings/curves.hpp"
#include "formal_rings/errors.hpp"
#include "formal_rings/fglaw.hpp"
#include "formal_rings/fring.hpp"
#include "formal_rings/json_io.hpp"
#include "formal_rings/scalars.hpp"
#include "formal_rings/series.hpp"
#include "formal_rings/witt.hpp"

#endif  // FORMAL_RINGS_FORMAL_RINGS_HPP
