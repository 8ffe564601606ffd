#pragma once

#include "iaa/error.hpp"
#include "iaa/interval.hpp"
#include "iaa/dataset.hpp"
#include "iaa/fuzzy_number.hpp"
#include "iaa/attributes.hpp"
#include "iaa/similarity.hpp"
#include "iaa/ranking.hpp"
#include "iaa/topsis.hpp"
#include "iaa/serialize.hpp"
