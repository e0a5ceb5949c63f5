#pragma once

#include "algebra.hpp"
#include "adc.hpp"
#include "chain_calculus.hpp"
#include "omega.hpp"
#include "decomposition.hpp"
#include "simplicial.hpp"
#include "horns.hpp"
#include "morphisms.hpp"
#include "io.hpp"
#include "verify.hpp"
