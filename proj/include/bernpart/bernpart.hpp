#ifndef BERNPART_BERNPART_HPP
#define BERNPART_BERNPART_HPP

#include "bernpart/asymptotics.hpp"
#include "bernpart/bernoulli.hpp"
#include "bernpart/bigfloat.hpp"
#include "bernpart/matrix.hpp"
#include "bernpart/partitions.hpp"
#include "bernpart/polynomial.hpp"
#include "bernpart/rational.hpp"
#include "bernpart/report.hpp"

#endif  // BERNPART_BERNPART_HPP
