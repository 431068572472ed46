#pragma once

#include "exact.hpp"
#include "qseries.hpp"
#include "word.hpp"
#include "brackets.hpp"
#include "words.hpp"
#include "iterint.hpp"
#include "numeric.hpp"
#include "mes.hpp"
#include "relations.hpp"
#include "suites.hpp"
