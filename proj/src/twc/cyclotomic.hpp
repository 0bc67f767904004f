#pragma once

#include <cstdint>
#include <vector>

namespace twc {

/// Element of Z[zeta_e] stored as integer coefficients over zeta_e^0..zeta_e^{e-1}.
/// That spanning set is redundant; equality and the canonical form go through
/// reduction modulo the e-th cyclotomic polynomial.
struct CycInt {
    long long e = 1;
    std::vector<long long> c; // length e

    static CycInt zero(long long e);
    static CycInt integer(long long e, long long v);
    static CycInt root_power(long long e, long long k); // zeta_e^k

    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator*(const CycInt& o) const;
    CycInt conjugate() const; // zeta -> zeta^-1
    bool is_zero() const;
    bool operator==(const CycInt& o) const;

    /// Coefficients over the power basis zeta^0..zeta^{phi(e)-1} after
    /// reduction mod the cyclotomic polynomial. Unique per value.
    std::vector<long long> reduced() const;
};

/// Coefficients of the e-th cyclotomic polynomial, constant term first.
std::vector<long long> cyclotomic_polynomial(long long e);

} // namespace twc
