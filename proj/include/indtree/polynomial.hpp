#ifndef INDTREE_POLYNOMIAL_HPP
#define INDTREE_POLYNOMIAL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace indtree {

// Coefficient counts grow exponentially with graph size and the classification
// hangs on the exact sign of I(G;-1), so coefficients are arbitrary-precision
// integers throughout. Fixed-width integers are not used in this module.
using BigInt = boost::multiprecision::cpp_int;

/// Dense integer polynomial; index i holds the coefficient s_i. No trailing
/// zero coefficients are stored, and the zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<BigInt> coeffs);
    Polynomial(std::initializer_list<long long> coeffs);

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial({1}); }
    static Polynomial x() { return Polynomial({0, 1}); }

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& coeff(std::size_t i) const;
    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    // Multiplication by x: s_i moves to index i+1.
    Polynomial shifted_mul_x() const;

    BigInt eval(const BigInt& t) const; // exact Horner evaluation

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);

    bool operator==(const Polynomial&) const = default;

    // "s_0 + s_1*x + s_2*x^2 + ..." with exact decimal integers; "0" when zero.
    std::string to_text() const;

private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

// Independence polynomial of the path on n vertices, by the endpoint recurrence
// I(P_n) = I(P_{n-1}) + x * I(P_{n-2}) with I(P_0) = 1 and I(P_1) = 1 + x.
Polynomial path_poly(int n);

// I(P_n;-1) by residue of n mod 6: 1 for n = 0,5; 0 for n = 1,4; -1 for n = 2,3.
int path_value_at_minus1(long long n);

// Same value via the integer recurrence a_n = a_{n-1} - a_{n-2}; kept as an
// independent cross-check of the mod-6 table.
int path_value_at_minus1_recurrence(long long n);

} // namespace indtree

#endif
