#pragma once

#include "cigler/laurent.hpp"
#include "cigler/polynomial.hpp"
#include "cigler/rational.hpp"

namespace cigler {

using Polynomial = BasicPolynomial<Rational>;
using LaurentPolynomial = BasicLaurent<Rational>;

} // namespace cigler
