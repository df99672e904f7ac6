#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

namespace icecount {

// Dense polynomial with exact rational coefficients, ascending degree.
// Trailing zero coefficients are stripped; the zero polynomial has
// degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<mpq_class> coeffs);
    static Poly constant(const mpq_class& value);
    static Poly monomial(const mpq_class& coeff, int power);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    mpq_class coeff(int power) const;
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }
    mpq_class leading() const;

    mpq_class operator()(const mpq_class& x) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const mpq_class& s) const;
    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

    // Quotient and remainder; divisor must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);

    // Descending powers, explicit '*', e.g. "n^3 + 6*n^2 + 3*n + 2".
    std::string to_string(const std::string& var = "n") const;

private:
    void trim();
    std::vector<mpq_class> coeffs_;
};

// Monic gcd over the rationals.
Poly poly_gcd(Poly a, Poly b);

// Reduced ratio of polynomials. Canonical form: num and den coprime with
// integer coefficients of joint content 1, den leading coefficient
// positive.
class RatFunc {
public:
    RatFunc() : num_(Poly::constant(0)), den_(Poly::constant(1)) {}
    RatFunc(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    mpq_class operator()(const mpq_class& x) const;

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;

    // Cross-multiplied equality: num*o.den == o.num*den.
    bool equivalent(const RatFunc& o) const;

    std::string to_string(const std::string& var = "n") const;
    nlohmann::json to_json() const;  // {num_coeffs, den_coeffs} as [num, den] pairs

private:
    Poly num_, den_;
};

// Unique polynomial of degree < #points through the given points.
Poly interpolate(const std::vector<std::pair<mpq_class, mpq_class>>& points);

// The degree-(n-1) polynomial p with p(lambda1) = A_lambda(n) for all
// lambda1 >= lambda2, built as sum_j B_j(lambda1) R(lambda, j) where
// B_j(x) = prod_{t=1}^{j-1}(x - lambda2 + t)/(j-1)! and R comes from
// enumeration of the right part. tail = (lambda2, ..., lambdan),
// n = tail.size() + 1.
Poly a_lambda_poly(const std::vector<long>& tail, int n);

// R_m as a reduced rational function of n, built symbolically from the
// sum over k; numerator degree 2m - floor((m+1)/2), denominator degree
// m - floor((m+1)/2) (asserted).
RatFunc rm_ratfunc(int m);

// sum_{k=0}^{n-1} C(m+k,m) C(-n,k) C(-n,n-1-k)
mpq_class lemma13_lhs(long m, int n);

// sum_{k=0}^{m} C(m,k) C(-n,k) C(-2n-k,n-1-k)
mpq_class lemma13_rhs(long m, int n);

// (-1)^(n-1) A(n) lemma13_lhs(m,n) / C(3n-2,n-1) == hook_sum_refined(n,m)
bool check_eq_alambda_inter(long m, int n);

}  // namespace icecount
