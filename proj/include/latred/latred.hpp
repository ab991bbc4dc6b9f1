#pragma once

#include "latred/basis.hpp"
#include "latred/bench.hpp"
#include "latred/bkz.hpp"
#include "latred/deep.hpp"
#include "latred/enumeration.hpp"
#include "latred/error.hpp"
#include "latred/exact_gso.hpp"
#include "latred/generators.hpp"
#include "latred/gso.hpp"
#include "latred/hnf.hpp"
#include "latred/lll.hpp"
#include "latred/params.hpp"
#include "latred/potlll.hpp"
#include "latred/reduce.hpp"
#include "latred/verify.hpp"
