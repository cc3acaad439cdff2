#pragma once

#include "seqmine/error.hpp"
#include "seqmine/time.hpp"
#include "seqmine/log.hpp"
#include "seqmine/csv.hpp"
#include "seqmine/mxml.hpp"
#include "seqmine/units.hpp"
#include "seqmine/discovery.hpp"
#include "seqmine/random.hpp"
#include "seqmine/clustering.hpp"
#include "seqmine/testkit.hpp"
