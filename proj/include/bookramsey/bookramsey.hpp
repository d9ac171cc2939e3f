#ifndef BOOKRAMSEY_BOOKRAMSEY_HPP
#define BOOKRAMSEY_BOOKRAMSEY_HPP

#include "canonical.hpp"
#include "cnf.hpp"
#include "constructions.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "extremal.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "patterns.hpp"
#include "ramsey.hpp"
#include "structure.hpp"

#endif
