#include "homds/field.hpp"

#include <algorithm>

namespace homds {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kMaxPrime = (u64{1} << 62);        // m == 1 envelope
constexpr u64 kMaxExtensionOrder = u64{1} << 20; // m >= 2 envelope

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = powmod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Dense little-endian polynomials over GF(p), used only during field
// construction (modulus validation and table generation).
using Poly = std::vector<u64>;

Poly poly_trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

Poly poly_mod(Poly a, const Poly& mod, u64 p) {
    a = poly_trim(std::move(a));
    const std::size_t dm = mod.size() - 1;  // mod monic of degree dm
    while (a.size() > dm) {
        const u64 lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        if (lead != 0) {
            for (std::size_t i = 0; i <= dm; ++i) {
                u64 t = mulmod(lead, mod[i], p);
                u64& c = a[shift + i];
                c = (c + p - t) % p;
            }
        }
        a = poly_trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, u64 p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            c[i + j] = (c[i + j] + mulmod(a[i], b[j], p)) % p;
        }
    }
    return poly_mod(std::move(c), mod, p);
}

// Remainder of f by monic divisor g.
Poly poly_rem(Poly f, const Poly& g, u64 p) { return poly_mod(std::move(f), g, p); }

bool is_irreducible(const Poly& f, u64 p) {
    const std::size_t m = f.size() - 1;
    if (m == 1) return true;
    // trial division by every monic polynomial of degree 1..m/2; the
    // extension-field envelope keeps p^(m/2) small
    for (std::size_t d = 1; 2 * d <= m; ++d) {
        u64 count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (u64 idx = 0; idx < count; ++idx) {
            Poly g(d + 1, 0);
            u64 v = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = v % p;
                v /= p;
            }
            g[d] = 1;
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

u64 checked_pow_order(u64 p, std::uint32_t m) {
    u64 q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        if (q > kMaxExtensionOrder / p) return 0;
        q *= p;
    }
    return q;
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> fs;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

Poly packed_to_poly(u64 v, u64 p, std::uint32_t m) {
    Poly c(m, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
        c[i] = v % p;
        v /= p;
    }
    return poly_trim(std::move(c));
}

u64 poly_to_packed(const Poly& f, u64 p, std::uint32_t m) {
    u64 v = 0;
    u64 scale = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        if (i < f.size()) v += f[i] * scale;
        scale *= p;
    }
    return v;
}

}  // namespace

Field Field::make(u64 p, std::uint32_t m, std::optional<std::vector<u64>> modulus) {
    require(is_prime_u64(p), Err::NonPrimeP, "p = " + std::to_string(p) + " is not prime");
    require(m >= 1 && m <= 16, Err::DegreeMismatch, "extension degree m must be in [1, 16]");

    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->m = m;

    if (m == 1) {
        require(p < kMaxPrime, Err::FieldTooLarge, "prime fields support p < 2^62");
        impl->q = p;
        if (modulus) {
            require(modulus->size() == 2 && (*modulus)[1] == 1 && (*modulus)[0] < p,
                    Err::DegreeMismatch, "modulus for a prime field must be monic of degree 1");
            impl->modulus = *modulus;
        } else {
            impl->modulus = {0, 1};
        }
        return Field(std::move(impl));
    }

    const u64 q = checked_pow_order(p, m);
    require(q != 0, Err::FieldTooLarge, "extension fields support p^m <= 2^20");
    impl->q = q;

    if (modulus) {
        require(modulus->size() == m + 1 && modulus->back() == 1, Err::DegreeMismatch,
                "modulus must be monic of degree m");
        for (u64 c : *modulus)
            require(c < p, Err::DegreeMismatch, "modulus coefficients must lie in [0, p)");
        require(is_irreducible(*modulus, p), Err::ReducibleModulus,
                "modulus is reducible over GF(p)");
        impl->modulus = *modulus;
    } else {
        // Lexicographically smallest irreducible monic polynomial, comparing
        // coefficient tuples (c_0, ..., c_{m-1}).
        std::vector<u64> best;
        std::vector<u64> c(m, 0);
        for (;;) {
            Poly f(c.begin(), c.end());
            f.push_back(1);
            if (is_irreducible(f, p)) {
                best = f;
                break;
            }
            // odometer with c_{m-1} fastest so that c_0 is most significant
            std::size_t i = m;
            while (i > 0) {
                --i;
                if (++c[i] < p) break;
                c[i] = 0;
                if (i == 0) raise(Err::ReducibleModulus, "no irreducible modulus found");
            }
        }
        impl->modulus = std::move(best);
    }

    // log/exp tables over a primitive element.
    const Poly& mod = impl->modulus;
    const auto factors = prime_factors(q - 1);
    u64 gen = 0;
    for (u64 v = 1; v < q; ++v) {
        Poly g = packed_to_poly(v, p, m);
        bool primitive = true;
        for (u64 r : factors) {
            u64 e = (q - 1) / r;
            Poly acc = {1};
            Poly base = g;
            while (e) {
                if (e & 1) acc = poly_mulmod(acc, base, mod, p);
                base = poly_mulmod(base, base, mod, p);
                e >>= 1;
            }
            if (poly_to_packed(acc, p, m) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gen = v;
            break;
        }
    }
    require(gen != 0, Err::ReducibleModulus, "no primitive element found (modulus not irreducible?)");

    impl->exp_table.assign(q - 1, 0);
    impl->log_table.assign(q, 0);
    Poly acc = {1};
    const Poly g = packed_to_poly(gen, p, m);
    for (u64 i = 0; i < q - 1; ++i) {
        const u64 packed = poly_to_packed(acc, p, m);
        impl->exp_table[i] = static_cast<std::uint32_t>(packed);
        impl->log_table[packed] = static_cast<std::uint32_t>(i);
        acc = poly_mulmod(acc, g, mod, p);
    }
    return Field(std::move(impl));
}

Field::Field() : impl_(Field::make(2, 1).impl_) {}

Fe Field::one() const { return 1; }

Fe Field::add(Fe a, Fe b) const {
    const auto& im = *impl_;
    if (im.m == 1) {
        Fe s = a + b;
        return s >= im.p ? s - im.p : s;
    }
    if (im.p == 2) return a ^ b;
    Fe r = 0;
    u64 scale = 1;
    for (std::uint32_t i = 0; i < im.m; ++i) {
        u64 ca = a % im.p, cb = b % im.p;
        u64 c = ca + cb;
        if (c >= im.p) c -= im.p;
        r += c * scale;
        a /= im.p;
        b /= im.p;
        scale *= im.p;
    }
    return r;
}

Fe Field::neg(Fe a) const {
    const auto& im = *impl_;
    if (im.m == 1) return a == 0 ? 0 : im.p - a;
    if (im.p == 2) return a;
    Fe r = 0;
    u64 scale = 1;
    for (std::uint32_t i = 0; i < im.m; ++i) {
        u64 c = a % im.p;
        r += (c == 0 ? 0 : im.p - c) * scale;
        a /= im.p;
        scale *= im.p;
    }
    return r;
}

Fe Field::sub(Fe a, Fe b) const { return add(a, neg(b)); }

Fe Field::mul(Fe a, Fe b) const {
    const auto& im = *impl_;
    if (im.m == 1) return mulmod(a, b, im.p);
    if (a == 0 || b == 0) return 0;
    u64 e = im.log_table[a] + im.log_table[b];
    if (e >= im.q - 1) e -= im.q - 1;
    return im.exp_table[e];
}

Fe Field::inv(Fe a) const {
    require(a != 0, Err::DivisionByZero, "inverse of zero");
    const auto& im = *impl_;
    if (im.m == 1) return powmod(a, im.p - 2, im.p);
    const u64 e = im.log_table[a];
    return im.exp_table[e == 0 ? 0 : im.q - 1 - e];
}

Fe Field::div(Fe a, Fe b) const { return mul(a, inv(b)); }

Fe Field::pow(Fe a, std::int64_t e) const {
    if (a == 0) {
        require(e >= 0, Err::ZeroToNegativePower, "0 raised to a negative power");
        return e == 0 ? one() : 0;
    }
    const u64 ord = order() - 1;  // multiplicative group order
    u64 r = static_cast<u64>(((e % static_cast<std::int64_t>(ord)) + static_cast<std::int64_t>(ord)) %
                             static_cast<std::int64_t>(ord));
    const auto& im = *impl_;
    if (im.m > 1) {
        const u64 le = (u128(im.log_table[a]) * r) % ord;
        return im.exp_table[le];
    }
    return powmod(a, r, im.p);
}

std::vector<u64> Field::coeffs(Fe a) const {
    const auto& im = *impl_;
    std::vector<u64> c(im.m, 0);
    if (im.m == 1) {
        c[0] = a;
        return c;
    }
    for (std::uint32_t i = 0; i < im.m; ++i) {
        c[i] = a % im.p;
        a /= im.p;
    }
    return c;
}

Fe Field::from_coeffs(std::span<const u64> c) const {
    const auto& im = *impl_;
    require(c.size() == im.m, Err::DegreeMismatch, "element needs exactly m coefficients");
    Fe v = 0;
    u64 scale = 1;
    for (std::uint32_t i = 0; i < im.m; ++i) {
        require(c[i] < im.p, Err::MalformedInput, "coefficient out of range [0, p)");
        v += c[i] * scale;
        scale *= im.p;
    }
    return v;
}

Fe Field::element_at(u64 idx) const {
    const auto& im = *impl_;
    require(idx < im.q, Err::IndexOutOfRange, "element index out of range");
    if (im.m == 1) return idx;
    // idx digits big-endian on c_0 give the lexicographic-on-coeffs order,
    // so c_{m-1} varies fastest.
    Fe v = 0;
    u64 place = 1;
    for (std::uint32_t j = 0; j + 1 < im.m; ++j) place *= im.p;
    for (std::uint32_t i = im.m; i > 0; --i) {
        v += (idx % im.p) * place;
        idx /= im.p;
        place /= im.p;
    }
    return v;
}

bool Field::same_as(const Field& other) const {
    return impl_->p == other.impl_->p && impl_->m == other.impl_->m &&
           impl_->modulus == other.impl_->modulus;
}

}  // namespace homds
