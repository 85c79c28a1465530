#pragma once

#include "bombieri/combinatorics.hpp"
#include "bombieri/errors.hpp"
#include "bombieri/fuzz.hpp"
#include "bombieri/identities.hpp"
#include "bombieri/inner_product.hpp"
#include "bombieri/multi_index.hpp"
#include "bombieri/parser.hpp"
#include "bombieri/polynomial.hpp"
#include "bombieri/random.hpp"
#include "bombieri/rational.hpp"
