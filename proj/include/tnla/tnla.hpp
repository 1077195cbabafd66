#pragma once

// Umbrella header. The oracle (GMP/MPFR-backed exact arithmetic) is a
// separate include so that binaries which only need the binary64 kernels do
// not pick up the multiprecision dependencies.

#include "tnla/baseline.hpp"
#include "tnla/bd.hpp"
#include "tnla/bidiagonal_svd.hpp"
#include "tnla/bjorck_pereyra.hpp"
#include "tnla/dense.hpp"
#include "tnla/errors.hpp"
#include "tnla/expand.hpp"
#include "tnla/generators.hpp"
#include "tnla/io.hpp"
#include "tnla/neville.hpp"
#include "tnla/qr.hpp"
#include "tnla/reduction.hpp"
#include "tnla/spectral.hpp"
