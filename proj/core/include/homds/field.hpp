#ifndef HOMDS_FIELD_HPP
#define HOMDS_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "homds/errors.hpp"
#include "homds/rng.hpp"

namespace homds {

/// A field element in canonical packed form.
///
/// Prime fields (m = 1) store the residue in [0, p). Extension fields store
/// the index sum(c_i * p^i) of the little-endian coefficient vector, so
/// equality is plain integer equality in both cases.
using Fe = std::uint64_t;

/// GF(p^m) with explicit monic irreducible modulus. Cheap to copy (shared
/// immutable state); all arithmetic is total on canonical elements.
///
/// Supported envelope: m = 1 with p < 2^62 (large-prime randomized checks),
/// or 2 <= m <= 16 with p^m <= 2^20 (log/exp table arithmetic; the
/// exhaustive irreducibility validation needs small fields anyway).
class Field {
  public:
    /// Default-constructed fields are GF(2).
    Field();

    /// Validates p, m and the modulus; picks the lexicographically smallest
    /// (on coefficient tuples c_0..c_{m-1}) monic irreducible modulus when
    /// none is given. For m = 1 the modulus is x.
    static Field make(std::uint64_t p, std::uint32_t m,
                      std::optional<std::vector<std::uint64_t>> modulus = std::nullopt);

    std::uint64_t p() const { return impl_->p; }
    std::uint32_t m() const { return impl_->m; }
    /// Coefficients c_0..c_m of the modulus, c_m = 1.
    const std::vector<std::uint64_t>& modulus() const { return impl_->modulus; }
    /// Field order q = p^m. Always representable within the envelope.
    std::uint64_t order() const { return impl_->q; }
    bool is_prime_field() const { return impl_->m == 1; }

    Fe zero() const { return 0; }
    Fe one() const;

    Fe add(Fe a, Fe b) const;
    Fe sub(Fe a, Fe b) const;
    Fe neg(Fe a) const;
    Fe mul(Fe a, Fe b) const;
    Fe inv(Fe a) const;
    Fe div(Fe a, Fe b) const;
    /// Square-and-multiply; negative exponents invert (ZeroToNegativePower
    /// on a = 0). Exponents reduce mod q-1, so Frobenius powers q^i are fine.
    Fe pow(Fe a, std::int64_t e) const;

    /// c_0..c_{m-1} with c_i in [0, p), little-endian in the modulus basis.
    std::vector<std::uint64_t> coeffs(Fe a) const;
    Fe from_coeffs(std::span<const std::uint64_t> c) const;
    /// Element at position idx of the deterministic enumeration
    /// (lexicographic on coefficient tuples, c_0 most significant).
    Fe element_at(std::uint64_t idx) const;

    Fe sample_uniform(Rng& rng) const { return element_at(rng.below(order())); }

    bool same_as(const Field& other) const;

  private:
    struct Impl {
        std::uint64_t p = 0;
        std::uint32_t m = 0;
        std::uint64_t q = 0;
        std::vector<std::uint64_t> modulus;      // c_0..c_m
        std::vector<std::uint32_t> log_table;    // size q, defined for a != 0
        std::vector<std::uint32_t> exp_table;    // size q-1, exp[i] = g^i
    };

    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

    std::shared_ptr<const Impl> impl_;
};

}  // namespace homds

#endif
