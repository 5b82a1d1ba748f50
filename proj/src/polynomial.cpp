#include "indtree/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace indtree {

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

Polynomial::Polynomial(std::initializer_list<long long> coeffs) {
    coeffs_.assign(coeffs.begin(), coeffs.end());
    normalize();
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

const BigInt& Polynomial::coeff(std::size_t i) const {
    static const BigInt kZero = 0;
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

Polynomial Polynomial::shifted_mul_x() const {
    if (is_zero())
        return {};
    Polynomial out;
    out.coeffs_.reserve(coeffs_.size() + 1);
    out.coeffs_.push_back(0);
    out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return out;
}

BigInt Polynomial::eval(const BigInt& t) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial out = a;
    out += b;
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    Polynomial out;
    out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    out.normalize();
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

std::string Polynomial::to_text() const {
    if (is_zero())
        return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0)
            out << " + ";
        out << coeffs_[i];
        if (i == 1)
            out << "*x";
        else if (i > 1)
            out << "*x^" << i;
    }
    return out.str();
}

Polynomial path_poly(int n) {
    if (n < 0)
        throw std::invalid_argument("path_poly: negative n");
    Polynomial prev = Polynomial::one();    // I(P_0)
    if (n == 0)
        return prev;
    Polynomial cur({1, 1});                 // I(P_1)
    for (int k = 2; k <= n; ++k) {
        Polynomial next = cur + prev.shifted_mul_x();
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

int path_value_at_minus1(long long n) {
    if (n < 0)
        throw std::invalid_argument("path_value_at_minus1: negative n");
    switch (n % 6) {
    case 0:
    case 5:
        return 1;
    case 1:
    case 4:
        return 0;
    default: // 2, 3
        return -1;
    }
}

int path_value_at_minus1_recurrence(long long n) {
    if (n < 0)
        throw std::invalid_argument("path_value_at_minus1_recurrence: negative n");
    int prev = 1, cur = 0; // I(P_0;-1), I(P_1;-1)
    if (n == 0)
        return prev;
    for (long long k = 2; k <= n; ++k) {
        int next = cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

} // namespace indtree
