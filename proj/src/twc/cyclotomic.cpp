#include "cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "errors.hpp"

namespace twc {

CycInt CycInt::zero(long long e) {
    CycInt v;
    v.e = e;
    v.c.assign((size_t)e, 0);
    return v;
}

CycInt CycInt::integer(long long e, long long val) {
    CycInt v = zero(e);
    v.c[0] = val;
    return v;
}

CycInt CycInt::root_power(long long e, long long k) {
    CycInt v = zero(e);
    k %= e;
    if (k < 0) k += e;
    v.c[(size_t)k] = 1;
    return v;
}

CycInt CycInt::operator+(const CycInt& o) const {
    if (e != o.e) throw ComputationFailedError("cyclotomic order mismatch");
    CycInt v = *this;
    for (size_t i = 0; i < c.size(); ++i) v.c[i] += o.c[i];
    return v;
}

CycInt CycInt::operator-(const CycInt& o) const {
    if (e != o.e) throw ComputationFailedError("cyclotomic order mismatch");
    CycInt v = *this;
    for (size_t i = 0; i < c.size(); ++i) v.c[i] -= o.c[i];
    return v;
}

CycInt CycInt::operator*(const CycInt& o) const {
    if (e != o.e) throw ComputationFailedError("cyclotomic order mismatch");
    CycInt v = zero(e);
    for (long long i = 0; i < e; ++i) {
        if (c[(size_t)i] == 0) continue;
        for (long long j = 0; j < e; ++j) {
            if (o.c[(size_t)j] == 0) continue;
            v.c[(size_t)((i + j) % e)] += c[(size_t)i] * o.c[(size_t)j];
        }
    }
    return v;
}

CycInt CycInt::conjugate() const {
    CycInt v = zero(e);
    for (long long i = 0; i < e; ++i) v.c[(size_t)((e - i) % e)] += c[(size_t)i];
    return v;
}

namespace {

// Exact division helper: removes a monic integer divisor in place.
// quot = dividend / divisor, remainder must be zero.
std::vector<long long> divide_exact(std::vector<long long> num, const std::vector<long long>& den) {
    long long dn = (long long)den.size() - 1;
    if (den.back() != 1) throw ComputationFailedError("divisor not monic");
    std::vector<long long> quot((size_t)((long long)num.size() - 1 - dn + 1), 0);
    for (long long k = (long long)num.size() - 1; k >= dn; --k) {
        long long q = num[(size_t)k];
        if (q == 0) continue;
        quot[(size_t)(k - dn)] = q;
        for (long long i = 0; i <= dn; ++i) num[(size_t)(k - dn + i)] -= q * den[(size_t)i];
    }
    for (long long v : num)
        if (v != 0) throw ComputationFailedError("division not exact");
    return quot;
}

} // namespace

std::vector<long long> cyclotomic_polynomial(long long e) {
    if (e < 1) throw ComputationFailedError("cyclotomic order must be positive");
    static std::map<long long, std::vector<long long>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    // Bottom-up over the divisors of e: Phi_d = (x^d - 1) / prod Phi_dd.
    for (long long d = 1; d <= e; ++d) {
        if (e % d != 0 || cache.count(d)) continue;
        std::vector<long long> poly((size_t)d + 1, 0);
        poly[0] = -1;
        poly[(size_t)d] = 1;
        for (long long dd = 1; dd < d; ++dd)
            if (d % dd == 0) poly = divide_exact(std::move(poly), cache.at(dd));
        cache[d] = std::move(poly);
    }
    return cache.at(e);
}

std::vector<long long> CycInt::reduced() const {
    auto phi = cyclotomic_polynomial(e);
    size_t deg = phi.size() - 1;
    std::vector<long long> rem = c;
    if (rem.size() < deg) rem.resize(deg, 0);
    for (size_t k = rem.size(); k-- > deg;) {
        long long q = rem[k];
        if (q == 0) continue;
        for (size_t i = 0; i < phi.size(); ++i) rem[k - deg + i] -= q * phi[i];
    }
    rem.resize(deg);
    return rem;
}

bool CycInt::is_zero() const {
    for (long long v : reduced())
        if (v != 0) return false;
    return true;
}

bool CycInt::operator==(const CycInt& o) const {
    if (e != o.e) return false;
    return reduced() == o.reduced();
}

} // namespace twc
