#ifndef MATCHMINOR_HPP
#define MATCHMINOR_HPP

#include "matchminor/bigraph.hpp"
#include "matchminor/counting.hpp"
#include "matchminor/decomp.hpp"
#include "matchminor/direction.hpp"
#include "matchminor/error.hpp"
#include "matchminor/graph.hpp"
#include "matchminor/grids.hpp"
#include "matchminor/io.hpp"
#include "matchminor/iso.hpp"
#include "matchminor/linkage.hpp"
#include "matchminor/minors.hpp"
#include "matchminor/porosity.hpp"

#endif
