#include "torb/numeric.hpp"

#include "torb/errors.hpp"

namespace torb {

ExtGcd ext_gcd(const Int& a, const Int& b) {
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;  // truncated division
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return ExtGcd{old_r, old_s, old_t};
}

Int gcd(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

Int mod_floor(const Int& a, const Int& n) {
    if (n < 1) throw InputError("mod_floor: modulus must be >= 1");
    Int r = a % n;
    if (r < 0) r += n;
    return r;
}

Int mod_inverse(const Int& a, const Int& n) {
    if (n < 1) throw InputError("mod_inverse: modulus must be >= 1");
    if (n == 1) return 0;
    ExtGcd e = ext_gcd(mod_floor(a, n), n);
    if (e.g != 1) throw InputError("mod_inverse: argument not a unit");
    return mod_floor(e.x, n);
}

std::pair<Int, Int> crt_combine(const std::vector<std::pair<Int, Int>>& pairs) {
    Int x = 0, n = 1;
    for (const auto& [r, m] : pairs) {
        if (m < 1) throw InputError("crt_combine: moduli must be >= 1");
        ExtGcd e = ext_gcd(n, m);
        if (e.g != 1) throw InputError("crt_combine: moduli not pairwise coprime");
        // x' = x mod n, x' = r mod m:  x' = x + n * (e.x * (r - x)) mod m
        Int prod = n * m;
        x = mod_floor(x + n * mod_floor(e.x * (r - x), m), prod);
        n = prod;
    }
    return {x, n};
}

std::vector<std::pair<Int, unsigned>> factorize(Int n) {
    if (n < 1) throw InputError("factorize: argument must be >= 1");
    std::vector<std::pair<Int, unsigned>> out;
    auto strip = [&](const Int& p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    };
    strip(2);
    for (Int p = 3; p * p <= n; p += 2) strip(p);
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (Int p = 3; p * p <= n; p += 2)
        if (n % p == 0) return false;
    return true;
}

std::pair<unsigned, Int> split_two_part(Int m) {
    if (m < 1) throw InputError("split_two_part: argument must be >= 1");
    unsigned s = 0;
    while (m % 2 == 0) {
        m /= 2;
        ++s;
    }
    return {s, m};
}

}  // namespace torb
