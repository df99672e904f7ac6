#include "icecount/formulas.hpp"

#include <stdexcept>

namespace icecount {

namespace {

// Exact evaluators only: any non-integral result is a transcription bug,
// so it is a hard error rather than a truncation.
Count as_integer(const mpq_class& q) {
    if (q.get_den() != 1) throw std::logic_error("expected integral value, got " + q.get_str());
    return q.get_num();
}

}  // namespace

mpq_class gen_binom(const mpz_class& alpha, long k) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    mpz_class num = 1;
    for (long i = 0; i < k; ++i) num *= alpha - i;
    mpq_class result(num, factorial(static_cast<unsigned long>(k)));
    result.canonicalize();
    return result;
}

Count binom(long n, long k) { return as_integer(gen_binom(n, k)); }

Count factorial(unsigned long n) {
    Count f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Count asm_total(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    mpq_class product = 1;
    for (int j = 0; j < n; ++j) {
        mpq_class factor(factorial(3ul * j + 1), factorial(static_cast<unsigned long>(n) + j));
        factor.canonicalize();
        product *= factor;
    }
    return as_integer(product);
}

Count vsasm_total(int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    mpq_class product = 1;
    for (int j = 1; j <= n; ++j) {
        mpq_class factor(factorial(6ul * j - 2) * factorial(2ul * j - 1),
                         factorial(4ul * j - 1) * factorial(4ul * j - 2));
        factor.canonicalize();
        product *= factor;
    }
    mpz_class pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(n));
    return as_integer(product / mpq_class(pow2));
}

Count refined_asm(int n, int j) {
    if (n < 1 || j < 1 || j > n) throw std::invalid_argument("index out of range");
    const mpq_class value = mpq_class(asm_total(n)) * gen_binom(n + j - 2, n - 1) *
                            gen_binom(2 * n - 1 - j, n - 1) / gen_binom(3 * n - 2, n - 1);
    return as_integer(value);
}

Count refined_vsasm(int n, int i) {
    if (n < 1 || i < 1 || i > n) throw std::invalid_argument("index out of range");
    const mpq_class value = gen_binom(2 * n + i - 2, 2 * n - 1) *
                            gen_binom(4 * n - i - 1, 2 * n - 1) /
                            gen_binom(4 * n - 2, 2 * n - 1) * mpq_class(vsasm_total(n - 1));
    return as_integer(value);
}

Count path_count(int r, int c) {
    if (r < 1 || c < 1) throw std::invalid_argument("dimensions must be positive");
    return binom(r + c - 2, c - 1);
}

Count l_count(long m, long j) {
    if (m < 0 || j < 1) throw std::invalid_argument("bad L-model parameters");
    return binom(m + j - 1, m);
}

Count decompose_count(const Partition& lambda) {
    const int n = lambda.length();
    if (n < 2) throw std::invalid_argument("decomposition needs at least two rows");
    const long m = lambda.first() - lambda.second();
    Count total = 0;
    for (int j = 1; j <= n; ++j) total += l_count(m, j) * count_R(lambda, j);
    return total;
}

Count hook_sum_refined(int n, long m) {
    if (n < 1 || m < 0) throw std::invalid_argument("bad hook parameters");
    mpq_class sum = 0;
    for (int j = 1; j <= n; ++j)
        sum += gen_binom(m + j - 1, m) * gen_binom(n + j - 2, n - 1) *
               gen_binom(2 * n - 1 - j, n - 1);
    return as_integer(mpq_class(asm_total(n)) * sum / gen_binom(3 * n - 2, n - 1));
}

Count hook_sum_m(int n, long m) {
    if (n < 1 || m < 0) throw std::invalid_argument("bad hook parameters");
    mpq_class sum = 0;
    for (long k = 0; k <= m; ++k) {
        mpz_class rising = 1;
        for (long t = -k; t < k; ++t) rising *= n + t;  // (n-k)...(n+k-1)
        mpz_class den = 1;
        for (long t = 0; t < k; ++t) den *= 2 * n + t;  // (2n)...(2n+k-1)
        mpq_class term(rising, den * factorial(static_cast<unsigned long>(k)));
        term.canonicalize();
        sum += gen_binom(m, k) * term;
    }
    return as_integer(mpq_class(asm_total(n)) * sum);
}

Count staircase_sum(int n, long lambda1) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (lambda1 < n - 1) throw std::invalid_argument("lambda1 must be at least n-1");
    mpq_class sum = 0;
    for (int j = 1; j <= n; ++j)
        sum += gen_binom(lambda1 + 1 - j, lambda1 + 1 - n) *
               gen_binom(2 * n + j - 2, 2 * n - 1) * gen_binom(4 * n - j - 1, 2 * n - 1);
    const mpq_class value =
        mpq_class(vsasm_total(n - 1)) * sum / gen_binom(4 * n - 2, 2 * n - 1);
    return as_integer(value);
}

}  // namespace icecount
