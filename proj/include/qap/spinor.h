#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "qap/bitcore.h"
#include "qap/exact_matrix.h"

namespace qap {

constexpr int kMaxMatrixBits = 6;

/// The spinor S^zeta_alpha: phase string zeta, partitioning string alpha.
/// Ordered by (alpha, zeta).
class Spinor {
   public:
    Spinor() = default;
    Spinor(BitWord zeta, BitWord alpha);

    static Spinor identity(int p) { return Spinor(BitWord::zero(p), BitWord::zero(p)); }
    /// Inverse of code().
    static Spinor from_code(int p, uint32_t code);
    /// Parses "S[zeta|alpha]".
    static Spinor parse(std::string_view text);

    int p() const { return p_; }
    BitWord zeta() const { return BitWord(p_, zeta_); }
    BitWord alpha() const { return BitWord(p_, alpha_); }
    uint32_t zeta_bits() const { return zeta_; }
    uint32_t alpha_bits() const { return alpha_; }
    /// (alpha << p) | zeta. Numeric order matches spinor order.
    uint32_t code() const { return (alpha_ << p_) | zeta_; }

    bool is_identity() const { return zeta_ == 0 && alpha_ == 0; }
    bool is_diagonal() const { return alpha_ == 0; }

    /// "S[zeta|alpha]".
    std::string str() const;
    /// Hermitian display: prefixed with "i·" when the self parity is odd.
    std::string display() const;

    bool operator==(const Spinor &) const = default;
    std::strong_ordering operator<=>(const Spinor &o) const;

   private:
    uint16_t zeta_ = 0;
    uint16_t alpha_ = 0;
    uint8_t p_ = 0;
};

/// i^phase * S.
struct PhasedSpinor {
    int phase = 0;  // 0..3
    Spinor body;

    PhasedSpinor() = default;
    PhasedSpinor(Spinor s) : phase(0), body(s) {}
    PhasedSpinor(int ph, Spinor s) : phase(((ph % 4) + 4) % 4), body(s) {}

    /// "-i·S[...]" etc.
    std::string str() const;
    bool operator==(const PhasedSpinor &) const = default;
};

/// Bi-addition: xor on both strings.
Spinor bi_add(const Spinor &a, const Spinor &b);

/// Matrix product, phase tracked in Z_4.
PhasedSpinor product(const PhasedSpinor &a, const PhasedSpinor &b);

/// Symplectic form: 0 iff the pair commutes.
bool symplectic(const Spinor &a, const Spinor &b);
inline bool commutes(const Spinor &a, const Spinor &b) { return !symplectic(a, b); }

/// zeta . alpha. Odd means anti-symmetric (and anti-hermitian).
bool self_parity(const Spinor &s);

/// Transpose in phase form: (-1)^(zeta.alpha) S.
PhasedSpinor transpose(const Spinor &s);

/// Explicit 2^p x 2^p matrix. With `hermitian`, multiplies by i^(zeta.alpha).
/// Throws ResourceError when p > 6.
ExactMatrix to_matrix(const PhasedSpinor &s, bool hermitian = false);

}  // namespace qap
