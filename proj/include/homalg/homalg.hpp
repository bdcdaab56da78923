#pragma once

#include "homalg/alpha_action.hpp"
#include "homalg/bialgebra.hpp"
#include "homalg/congruence.hpp"
#include "homalg/descriptor.hpp"
#include "homalg/errors.hpp"
#include "homalg/free_morphisms.hpp"
#include "homalg/hom_algebra.hpp"
#include "homalg/hom_lie.hpp"
#include "homalg/lincomb.hpp"
#include "homalg/polynomial.hpp"
#include "homalg/rational.hpp"
#include "homalg/report.hpp"
#include "homalg/suites.hpp"
#include "homalg/symbol.hpp"
#include "homalg/term.hpp"
#include "homalg/text.hpp"
