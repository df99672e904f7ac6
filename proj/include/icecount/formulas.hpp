#pragma once

#include <gmpxx.h>

#include "icecount/enumerate.hpp"
#include "icecount/partition.hpp"

namespace icecount {

// Generalized binomial C(alpha, k): 1 when k = 0, 0 when k < 0, otherwise
// alpha(alpha-1)...(alpha-k+1)/k!. Integer-valued for integer alpha.
mpq_class gen_binom(const mpz_class& alpha, long k);

// Plain integer binomial, via gen_binom. Zero for k < 0 or k > n >= 0.
Count binom(long n, long k);

Count factorial(unsigned long n);

// Every evaluator below works in exact rationals and asserts integrality
// before returning; a nonzero remainder throws std::logic_error.

// A(n) = prod_{j=0}^{n-1} (3j+1)!/(n+j)!
Count asm_total(int n);

// A_V(2n+1) = 2^-n prod_{j=1}^{n} (6j-2)!(2j-1)! / ((4j-1)!(4j-2)!),
// with A_V(1) = 1 for n = 0.
Count vsasm_total(int n);

// A(n,j) = A(n) C(n+j-2,n-1) C(2n-1-j,n-1) / C(3n-2,n-1)
Count refined_asm(int n, int j);

// A_V(2n+1,i) = C(2n+i-2,2n-1) C(4n-i-1,2n-1) / C(4n-2,2n-1) * A_V(2n-1)
Count refined_vsasm(int n, int i);

// S(r,c) = T(r,c) = C(r+c-2, c-1)
Count path_count(int r, int c);

// L(m,j) = C(m+j-1, m)
Count l_count(long m, long j);

// sum_j C(lambda1-lambda2+j-1, lambda1-lambda2) R(lambda, j), with
// R(lambda, j) obtained by enumeration.
Count decompose_count(const Partition& lambda);

// Hook A_lambda(n), lambda = (m+d, d, ..., d), via the refined-ASM sum:
// A(n)/C(3n-2,n-1) * sum_j C(m+j-1,m) C(n+j-2,n-1) C(2n-1-j,n-1)
Count hook_sum_refined(int n, long m);

// The same count via the sum over k of C(m,k)/k! *
// (n-k)...(n+k-1) / ((2n)...(2n+k-1)), times A(n).
Count hook_sum_m(int n, long m);

// Staircase A_lambda(n), lambda = (lambda1, n-2, ..., 1, 0), lambda1 >= n-1:
// A_V(2n-1)/C(4n-2,2n-1) * sum_j C(lambda1+1-j, lambda1+1-n)
//   C(2n+j-2,2n-1) C(4n-j-1,2n-1)
Count staircase_sum(int n, long lambda1);

}  // namespace icecount
