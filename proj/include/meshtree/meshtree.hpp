#pragma once

#include "meshtree/arrays.hpp"
#include "meshtree/bsms.hpp"
#include "meshtree/delaunay.hpp"
#include "meshtree/error.hpp"
#include "meshtree/io.hpp"
#include "meshtree/mesh.hpp"
#include "meshtree/metrics.hpp"
#include "meshtree/partition.hpp"
#include "meshtree/predicates.hpp"
#include "meshtree/rewire.hpp"
#include "meshtree/version.hpp"
