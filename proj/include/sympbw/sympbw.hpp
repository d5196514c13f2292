#pragma once

#include "sympbw/common.hpp"
#include "sympbw/matrix.hpp"
#include "sympbw/liealg.hpp"
#include "sympbw/fflv.hpp"
#include "sympbw/tableaux.hpp"
#include "sympbw/correspondence.hpp"
#include "sympbw/pluecker.hpp"
#include "sympbw/polynomial.hpp"
#include "sympbw/relations.hpp"
#include "sympbw/straighten.hpp"
#include "sympbw/verify.hpp"
