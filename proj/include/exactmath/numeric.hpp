#pragma once

#include "exactmath/unipoly.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <string>
#include <utility>
#include <vector>

namespace exactmath {

using Real = boost::multiprecision::cpp_bin_float_50;
using Complex = boost::multiprecision::cpp_complex_50;

Real to_real(const Rational& q);

// All complex roots (with multiplicity) of a polynomial with complex coefficients,
// lowest coefficient first. Aberth iteration with Newton polishing.
std::vector<Complex> complex_roots(const std::vector<Complex>& coeffs);

// One embedding of a tower: the values of each generator, innermost first.
struct Embedding {
    std::vector<std::pair<const ExtField*, Complex>> values;
    Complex value_of(const ExtField* f) const;
};

// Every embedding of K into the complex numbers (one empty embedding for Q).
std::vector<Embedding> embeddings(const FieldPtr& K);
Complex evaluate(const Scalar& a, const Embedding& e);

std::string decimal(const Real& r, int digits = 50);
std::string decimal(const Complex& c, int digits = 50);

} // namespace exactmath
