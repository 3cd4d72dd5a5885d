#pragma once

#include "ordram/core/bounds.hpp"
#include "ordram/core/cliques.hpp"
#include "ordram/core/coloring.hpp"
#include "ordram/core/format.hpp"
#include "ordram/core/generators.hpp"
#include "ordram/core/pattern.hpp"
#include "ordram/core/random.hpp"
#include "ordram/core/types.hpp"
#include "ordram/extract/basic.hpp"
#include "ordram/extract/canonical.hpp"
#include "ordram/extract/pathpower.hpp"
#include "ordram/extract/rednet.hpp"
#include "ordram/extract/result.hpp"
#include "ordram/extract/window_chi.hpp"
#include "ordram/oracle/brute_force.hpp"
#include "ordram/oracle/exact.hpp"
#include "ordram/witness/certificate.hpp"
#include "ordram/witness/forest.hpp"
#include "ordram/witness/ktt.hpp"
#include "ordram/witness/verify.hpp"
