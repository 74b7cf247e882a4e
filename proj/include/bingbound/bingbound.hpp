#pragma once

#include "bingbound/core/arith.hpp"
#include "bingbound/core/error.hpp"
#include "bingbound/core/polynomial.hpp"
#include "bingbound/seifert/catalog.hpp"
#include "bingbound/seifert/evaluate.hpp"
#include "bingbound/seifert/expression.hpp"
#include "bingbound/seifert/matrix.hpp"
#include "bingbound/seifert/parser.hpp"
#include "bingbound/invariants/alexander.hpp"
#include "bingbound/invariants/genus.hpp"
#include "bingbound/invariants/inertia.hpp"
#include "bingbound/invariants/jumps.hpp"
#include "bingbound/invariants/nu.hpp"
#include "bingbound/invariants/signature.hpp"
#include "bingbound/bing/covering.hpp"
#include "bingbound/bing/tree.hpp"
#include "bingbound/bounds/bounds.hpp"
