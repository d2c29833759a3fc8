#ifndef POLYAUT_POLYAUT_HPP
#define POLYAUT_POLYAUT_HPP

#include <polyaut/classifier.hpp>
#include <polyaut/degree_bound.hpp>
#include <polyaut/errors.hpp>
#include <polyaut/extended_degree.hpp>
#include <polyaut/linear_solve.hpp>
#include <polyaut/poly_map.hpp>
#include <polyaut/poly_text.hpp>
#include <polyaut/polynomial.hpp>
#include <polyaut/reduction.hpp>
#include <polyaut/semigroup.hpp>

#endif // POLYAUT_POLYAUT_HPP
