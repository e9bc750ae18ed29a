#pragma once

#include "infopower/catalog.hpp"
#include "infopower/commuting.hpp"
#include "infopower/documents.hpp"
#include "infopower/duality.hpp"
#include "infopower/errors.hpp"
#include "infopower/info_measures.hpp"
#include "infopower/matrix.hpp"
#include "infopower/optimizer.hpp"
#include "infopower/povm.hpp"
#include "infopower/random.hpp"
#include "infopower/states.hpp"
