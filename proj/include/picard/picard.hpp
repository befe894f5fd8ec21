#pragma once

// Umbrella header for the whole library.

#include "picard/complex_rational.hpp"
#include "picard/decompose.hpp"
#include "picard/errors.hpp"
#include "picard/gaussian.hpp"
#include "picard/heisenberg.hpp"
#include "picard/integers.hpp"
#include "picard/matrix.hpp"
#include "picard/matrix_json.hpp"
#include "picard/random_word.hpp"
#include "picard/sampling.hpp"
#include "picard/selftest.hpp"
#include "picard/stabilizer.hpp"
#include "picard/word.hpp"
