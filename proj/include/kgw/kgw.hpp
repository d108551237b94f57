#pragma once

#include "kgw/category/algebra.hpp"
#include "kgw/category/finite_category.hpp"
#include "kgw/category/functor.hpp"
#include "kgw/category/homotopy.hpp"
#include "kgw/category/serialize.hpp"
#include "kgw/cli/run.hpp"
#include "kgw/constructions/comma_tau.hpp"
#include "kgw/constructions/conflations.hpp"
#include "kgw/constructions/invariants.hpp"
#include "kgw/constructions/localization.hpp"
#include "kgw/constructions/q.hpp"
#include "kgw/constructions/qh.hpp"
#include "kgw/f1/axioms.hpp"
#include "kgw/f1/census.hpp"
#include "kgw/f1/conflation.hpp"
#include "kgw/f1/io.hpp"
#include "kgw/f1/morphism.hpp"
#include "kgw/f1/square.hpp"
#include "kgw/hermitian/decomposition.hpp"
#include "kgw/hermitian/form.hpp"
#include "kgw/hermitian/isotropic.hpp"
#include "kgw/hermitian/witt.hpp"
