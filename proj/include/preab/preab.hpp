#ifndef PREAB_PREAB_HPP
#define PREAB_PREAB_HPP

#include "envelope.hpp"
#include "instances.hpp"
#include "linear.hpp"
#include "prealgebra.hpp"
#include "prelie.hpp"
#include "report.hpp"
#include "scalar.hpp"
#include "signs.hpp"
#include "suites.hpp"
#include "symalg.hpp"
#include "symmetrized.hpp"
#include "tensor.hpp"

#endif  // PREAB_PREAB_HPP
