#pragma once

#include "goodsg/error.hpp"
#include "goodsg/ext_point.hpp"
#include "goodsg/semigroup.hpp"
#include "goodsg/ideal.hpp"
#include "goodsg/levels.hpp"
#include "goodsg/subspace.hpp"
#include "goodsg/oracle.hpp"
#include "goodsg/corpus.hpp"
#include "goodsg/io.hpp"
