#pragma once

// Umbrella header for the ordis library: logic programs with ordered
// disjunction under a three-valued answer-set semantics, the original
// degree-based semantics, and the four-valued model-theoretic oracle.

#include "ordis/answer_sets.hpp"
#include "ordis/brewka.hpp"
#include "ordis/characterization.hpp"
#include "ordis/enumerate.hpp"
#include "ordis/errors.hpp"
#include "ordis/eval.hpp"
#include "ordis/formula.hpp"
#include "ordis/interpretation.hpp"
#include "ordis/literal.hpp"
#include "ordis/logic_lab.hpp"
#include "ordis/parser.hpp"
#include "ordis/preference.hpp"
#include "ordis/reduct.hpp"
#include "ordis/render.hpp"
#include "ordis/syntax.hpp"
#include "ordis/truth.hpp"
