#pragma once

#include "tralg/bits.hpp"
#include "tralg/circuit.hpp"
#include "tralg/convenience.hpp"
#include "tralg/cube.hpp"
#include "tralg/errors.hpp"
#include "tralg/extension.hpp"
#include "tralg/function_literal.hpp"
#include "tralg/g_class.hpp"
#include "tralg/npn.hpp"
#include "tralg/transient.hpp"
#include "tralg/truth_table.hpp"
