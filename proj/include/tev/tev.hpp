#pragma once

#include "greene.hpp"
#include "ltableau.hpp"
#include "params.hpp"
#include "partition.hpp"
#include "rsk.hpp"
#include "schubert.hpp"
#include "tableau.hpp"
#include "util.hpp"
#include "verify.hpp"
#include "word.hpp"
#include "word_filter.hpp"
