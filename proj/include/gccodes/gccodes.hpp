#pragma once

#include "number_theory.hpp"
#include "field.hpp"
#include "polynomial.hpp"
#include "cyclotomic.hpp"
#include "symbols.hpp"
#include "enumerate.hpp"
#include "code.hpp"
#include "enumerators.hpp"
#include "structure.hpp"
#include "dna.hpp"
#include "format.hpp"
