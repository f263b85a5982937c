#pragma once

#include "tsys/bitrel.hpp"
#include "tsys/counts.hpp"
#include "tsys/errors.hpp"
#include "tsys/lattice.hpp"
#include "tsys/noncrossing.hpp"
#include "tsys/poset.hpp"
#include "tsys/serialize.hpp"
#include "tsys/structures.hpp"
#include "tsys/transfer.hpp"
#include "tsys/trees.hpp"
#include "tsys/triangulation.hpp"
