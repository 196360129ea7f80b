#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gradus/artinian.hpp"
#include "gradus/degreewise.hpp"
#include "gradus/module_file.hpp"
#include "gradus/presented_module.hpp"

namespace gradus::testing {

RingSpec ring(int nvars, Scalar p = kDefaultPrime);
Polynomial var(const RingSpec& r, int t);
Polynomial poly(const RingSpec& r, const std::string& text);
std::vector<Polynomial> seq(const RingSpec& r, const std::string& text);
PresentedModule mod(const std::string& text);
PresentedModule fixture(const std::string& name);

// Oracle: monomials of degree j in n variables divisible by none of `gens`.
std::size_t standard_monomials(int nvars, int j, const std::vector<Exponents>& gens);

// Oracle: C(j + n - 1, n - 1), zero for j < 0.
std::size_t binomial_dim(int nvars, int j);

std::size_t total(const std::vector<std::size_t>& dims);

// Independent 0:_Y(f) piece: kernel of the stacked action matrices at degree j.
std::size_t colon_dim(const DegreewiseModule& y, const std::vector<Polynomial>& f, int j);

Polynomial random_form(const RingSpec& r, int degree, std::mt19937_64& rng, bool sparse);

// A small random presented module over r: 1-2 generators, 0-2 random relations.
PresentedModule random_module(const RingSpec& r, std::mt19937_64& rng);

}  // namespace gradus::testing
