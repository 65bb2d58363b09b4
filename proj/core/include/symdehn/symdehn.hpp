#pragma once

#include "symdehn/crystal.hpp"
#include "symdehn/cyclo.hpp"
#include "symdehn/dehn.hpp"
#include "symdehn/diophantine.hpp"
#include "symdehn/errors.hpp"
#include "symdehn/exactnum.hpp"
#include "symdehn/kummer.hpp"
#include "symdehn/pyramid.hpp"
