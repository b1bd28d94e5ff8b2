#ifndef KLAB_KLAB_HPP
#define KLAB_KLAB_HPP

#include "error.hpp"
#include "field.hpp"
#include "sparse.hpp"
#include "matrix.hpp"
#include "graded.hpp"
#include "ring.hpp"
#include "algebra.hpp"
#include "module.hpp"
#include "build.hpp"
#include "resolution.hpp"
#include "derived.hpp"
#include "random.hpp"
#include "sdmod.hpp"
#include "classify.hpp"
#include "io.hpp"
#include "suites.hpp"

#endif
