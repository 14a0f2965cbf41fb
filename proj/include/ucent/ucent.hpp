#pragma once

#include "ucent/centrality_vector.hpp"
#include "ucent/classical.hpp"
#include "ucent/control.hpp"
#include "ucent/errors.hpp"
#include "ucent/generators.hpp"
#include "ucent/graph.hpp"
#include "ucent/phi.hpp"
#include "ucent/rank.hpp"
#include "ucent/spectral.hpp"
#include "ucent/ucentrality.hpp"
