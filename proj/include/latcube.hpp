// latcube.hpp — umbrella header.

#pragma once

#include "latcube/classify.hpp"
#include "latcube/construct.hpp"
#include "latcube/errors.hpp"
#include "latcube/exact.hpp"
#include "latcube/oracle.hpp"
#include "latcube/qform.hpp"
#include "latcube/squares.hpp"
