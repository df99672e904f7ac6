#include "icecount/exactalg.hpp"

#include <stdexcept>

#include "icecount/enumerate.hpp"
#include "icecount/formulas.hpp"

namespace icecount {

Poly::Poly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const mpq_class& value) { return Poly({value}); }

Poly Poly::monomial(const mpq_class& coeff, int power) {
    std::vector<mpq_class> c(static_cast<size_t>(power) + 1, 0);
    c.back() = coeff;
    return Poly(std::move(c));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpq_class Poly::coeff(int power) const {
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<size_t>(power)];
}

mpq_class Poly::leading() const {
    if (coeffs_.empty()) return 0;
    return coeffs_.back();
}

mpq_class Poly::operator()(const mpq_class& x) const {
    mpq_class value = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) value = value * x + *it;
    return value;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<mpq_class> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<mpq_class> c = coeffs_;
    for (auto& q : c) q = -q;
    return Poly(std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    if (coeffs_.empty() || o.coeffs_.empty()) return Poly();
    std::vector<mpq_class> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return Poly(std::move(c));
}

Poly Poly::operator*(const mpq_class& s) const {
    std::vector<mpq_class> c = coeffs_;
    for (auto& q : c) q *= s;
    return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<mpq_class> rem = num.coeffs_;
    const int dd = den.degree();
    if (num.degree() < dd) return {Poly(), num};
    std::vector<mpq_class> quot(static_cast<size_t>(num.degree() - dd) + 1, 0);
    const mpq_class lead = den.leading();
    for (int k = num.degree() - dd; k >= 0; --k) {
        const mpq_class q = rem[static_cast<size_t>(k + dd)] / lead;
        quot[static_cast<size_t>(k)] = q;
        if (q == 0) continue;
        for (int i = 0; i <= dd; ++i)
            rem[static_cast<size_t>(k + i)] -= q * den.coeffs_[static_cast<size_t>(i)];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

std::string Poly::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int p = degree(); p >= 0; --p) {
        const mpq_class c = coeff(p);
        if (c == 0) continue;
        const bool first = out.empty();
        mpq_class abs_c = c < 0 ? mpq_class(-c) : c;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        const bool unit = abs_c == 1 && p > 0;
        if (!unit) out += abs_c.get_str();
        if (p > 0) {
            if (!unit) out += "*";
            out += var;
            if (p > 1) out += "^" + std::to_string(p);
        }
    }
    return out;
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = Poly::divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (mpq_class(1) / a.leading());  // monic
}

namespace {

// Scale num and den so both have integer coefficients with joint content
// 1 and den has positive leading coefficient.
void normalize_pair(Poly& num, Poly& den) {
    mpz_class den_lcm = 1;
    for (const auto& q : num.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    for (const auto& q : den.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    num = num * mpq_class(den_lcm);
    den = den * mpq_class(den_lcm);
    mpz_class content = 0;
    for (const auto& q : num.coeffs()) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), q.get_num().get_mpz_t());
    for (const auto& q : den.coeffs()) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), q.get_num().get_mpz_t());
    if (content != 0) {
        mpq_class inv(1, content);
        inv.canonicalize();
        num = num * inv;
        den = den * inv;
    }
    if (den.leading() < 0) {
        num = -num;
        den = -den;
    }
}

}  // namespace

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(1);
        return;
    }
    const Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Poly::divmod(num_, g).first;
        den_ = Poly::divmod(den_, g).first;
    }
    normalize_pair(num_, den_);
}

mpq_class RatFunc::operator()(const mpq_class& x) const {
    const mpq_class d = den_(x);
    if (d == 0) throw std::domain_error("rational function pole");
    return num_(x) / d;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

bool RatFunc::equivalent(const RatFunc& o) const { return num_ * o.den_ == o.num_ * den_; }

std::string RatFunc::to_string(const std::string& var) const {
    if (den_ == Poly::constant(1)) return num_.to_string(var);
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

nlohmann::json RatFunc::to_json() const {
    const auto coeff_list = [](const Poly& p) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& q : p.coeffs())
            arr.push_back({q.get_num().get_str(), q.get_den().get_str()});
        return arr;
    };
    return {{"num_coeffs", coeff_list(num_)}, {"den_coeffs", coeff_list(den_)}};
}

Poly interpolate(const std::vector<std::pair<mpq_class, mpq_class>>& points) {
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("duplicate interpolation abscissa");
    Poly result;
    for (size_t i = 0; i < points.size(); ++i) {
        Poly basis = Poly::constant(1);
        mpq_class scale = points[i].second;
        for (size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis = basis * Poly({-points[j].first, 1});
            scale /= points[i].first - points[j].first;
        }
        result = result + basis * scale;
    }
    return result;
}

Poly a_lambda_poly(const std::vector<long>& tail, int n) {
    if (n < 2) throw std::invalid_argument("polynomial form needs n >= 2");
    if (static_cast<int>(tail.size()) != n - 1)
        throw std::invalid_argument("tail must have n-1 parts");
    const long lambda2 = tail.front();
    std::vector<long> parts;
    parts.push_back(lambda2);  // any lambda1 >= lambda2 gives the same right part
    parts.insert(parts.end(), tail.begin(), tail.end());
    const Partition lambda(parts);

    Poly result;
    for (int j = 1; j <= n; ++j) {
        // B_j(x) = prod_{t=1}^{j-1} (x - lambda2 + t) / (j-1)!
        Poly basis = Poly::constant(1);
        for (long t = 1; t < j; ++t) basis = basis * Poly({mpq_class(t - lambda2), 1});
        mpq_class scale(count_R(lambda, j), factorial(static_cast<unsigned long>(j - 1)));
        scale.canonicalize();
        result = result + basis * scale;
    }
    if (result.degree() != n - 1)
        throw std::logic_error("A_lambda polynomial degree mismatch");
    return result;
}

RatFunc rm_ratfunc(int m) {
    if (m < 0) throw std::invalid_argument("m must be nonnegative");
    RatFunc sum(Poly::constant(0), Poly::constant(1));
    for (int k = 0; k <= m; ++k) {
        Poly num = Poly::constant(mpq_class(binom(m, k), factorial(static_cast<unsigned long>(k))));
        for (int t = -k; t < k; ++t) num = num * Poly({mpq_class(t), 1});  // (n-k)...(n+k-1)
        Poly den = Poly::constant(1);
        for (int t = 0; t < k; ++t) den = den * Poly({mpq_class(t), 2});  // (2n)...(2n+k-1)
        sum = sum + RatFunc(std::move(num), std::move(den));
    }
    const int expected_num = 2 * m - (m + 1) / 2;
    const int expected_den = m - (m + 1) / 2;
    if (sum.num().degree() != expected_num || sum.den().degree() != expected_den)
        throw std::logic_error("R_m degree mismatch");
    return sum;
}

mpq_class lemma13_lhs(long m, int n) {
    if (m < 0 || n < 1) throw std::invalid_argument("bad identity parameters");
    mpq_class sum = 0;
    for (long k = 0; k <= n - 1; ++k)
        sum += gen_binom(m + k, m) * gen_binom(-n, k) * gen_binom(-n, n - 1 - k);
    return sum;
}

mpq_class lemma13_rhs(long m, int n) {
    if (m < 0 || n < 1) throw std::invalid_argument("bad identity parameters");
    mpq_class sum = 0;
    for (long k = 0; k <= m; ++k)
        sum += gen_binom(m, k) * gen_binom(-n, k) * gen_binom(-2 * n - k, n - 1 - k);
    return sum;
}

bool check_eq_alambda_inter(long m, int n) {
    const int sign = (n - 1) % 2 == 0 ? 1 : -1;
    const mpq_class lhs = mpq_class(sign) * mpq_class(asm_total(n)) * lemma13_lhs(m, n) /
                          gen_binom(3 * n - 2, n - 1);
    return lhs == mpq_class(hook_sum_refined(n, m));
}

}  // namespace icecount
