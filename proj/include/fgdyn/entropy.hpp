#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fgdyn {

enum class Tau { Cyc123, Swap12, Id };

struct OrbitData {
    int n1 = 1;
    int n2 = 1;
    int n3 = 1;
    Tau tau = Tau::Cyc123;
};

// Integer polynomial, coefficients in ascending degree. The zero polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<std::int64_t> coeffs);
    static IntPolynomial monomial(int degree, std::int64_t coeff = 1);
    static IntPolynomial constant(std::int64_t c) { return monomial(0, c); }

    const std::vector<std::int64_t>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    std::int64_t operator[](int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : 0; }
    std::int64_t leading() const { return c_.empty() ? 0 : c_.back(); }

    long double eval(long double t) const;
    IntPolynomial derivative() const;

    friend IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q);
    friend IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q);
    friend IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    std::string to_string() const;

private:
    void trim();
    std::vector<std::int64_t> c_;
};

// Exact division by a monic divisor. Returns nullopt when the remainder is nonzero.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& p, const IntPolynomial& monic_divisor);

IntPolynomial char_poly(const OrbitData& d);

// Largest real root in [1, 1 + max|a_i / a_deg|], or nullopt when there is none.
// A root at exactly 1 is reported when no larger one exists. Throws RangeError when tol <= 0.
std::optional<double> largest_real_root(const IntPolynomial& p, double tol = 1e-12);

int euler_phi(int d);
IntPolynomial cyclotomic(int d);
// Removes every cyclotomic factor Φ_d with φ(d) <= deg p, with multiplicity.
IntPolynomial cyclotomic_strip(const IntPolynomial& p);

}  // namespace fgdyn
