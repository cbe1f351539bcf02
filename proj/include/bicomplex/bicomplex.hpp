// Umbrella header: the whole library.
#pragma once

#include "bicomplex/analyze.hpp"
#include "bicomplex/complex_matrix.hpp"
#include "bicomplex/errors.hpp"
#include "bicomplex/float_matrix.hpp"
#include "bicomplex/generators.hpp"
#include "bicomplex/io.hpp"
#include "bicomplex/matrix.hpp"
#include "bicomplex/operator.hpp"
#include "bicomplex/rational.hpp"
#include "bicomplex/rational_complex.hpp"
#include "bicomplex/scalar.hpp"
#include "bicomplex/text.hpp"
#include "bicomplex/verify.hpp"
