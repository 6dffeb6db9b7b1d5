#pragma once

#include "plyalg/dalg.hpp"
#include "plyalg/orders.hpp"
#include "plyalg/shat.hpp"
#include "plyalg/telem.hpp"

#include <gmpxx.h>

namespace plyalg {

// Counting formulas: catalan_count(n, k) = k^n C(2n-2, n-1) / n trees with one
// operator; beta(n, k) = 2^(n-1) catalan_count(n, k) with two operators.
mpz_class catalan_count(unsigned n, unsigned alphabet_size);
mpz_class beta(unsigned n, unsigned alphabet_size);

// Graded enumerations, each sorted increasingly in its basis order
// (the natural basis uses the fixed structural order).
const std::vector<Bhat>& enumerate_Bhat(unsigned n, unsigned alphabet_size);
const std::vector<Shat>& enumerate_Shat(unsigned n, unsigned alphabet_size);
const std::vector<TElem>& enumerate_T(unsigned n, unsigned alphabet_size);
// The one-operator basis: bracket-free refined-basis elements.
const std::vector<Shat>& enumerate_S(unsigned n, unsigned alphabet_size);

// Conversions between the natural and the refined basis.
const LShat& to_shat(Bhat x);
LShat to_shat(const LBhat& x);
const LBhat& from_shat(Shat x);
LBhat from_shat(const LShat& x);

// The automorphism restricted to basis elements, and its inverse.
TElem phi(Shat x);
Shat phi_inv(TElem x);
// Linear extension: x = sum c_u u (refined coordinates) maps to sum c_u phi(u).
LT phi_on_A(const LBhat& x);
LShat phi_inv_on_A(const LBhat& x);

// Value of a triple-bracket basis element in the natural basis.
const LBhat& eval_T(TElem x);
LBhat eval_T(const LT& x);
// Refined-basis coordinates of eval_T(x).
const LShat& shat_of_T(TElem x);

// Coordinates in the triple-bracket basis, by triangular elimination against
// the refined basis.
LT to_T(const LBhat& x);
LT to_T_from_shat(const LShat& x);

// Largest word length among the terms of a refined-basis combination.
std::size_t max_word_length(const LShat& x);

} // namespace plyalg
