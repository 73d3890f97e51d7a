#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qap {

constexpr int kMaxBits = 16;

/// Fixed-length word over Z_2. Bit 1 is the leftmost printed character and
/// the most significant bit of `bits()`, so numeric order is lex order.
class BitWord {
   public:
    BitWord() = default;
    BitWord(int p, uint32_t bits);

    static BitWord zero(int p) { return BitWord(p, 0); }
    /// Word with only bit `r` set (1-based, r == 1 is leftmost).
    static BitWord unit(int p, int r);
    static BitWord from_string(std::string_view text);

    int p() const { return p_; }
    uint32_t bits() const { return bits_; }
    bool get(int r) const;  // 1-based
    int weight() const;
    bool is_zero() const { return bits_ == 0; }
    std::string str() const;

    BitWord operator^(const BitWord &other) const;
    BitWord &operator^=(const BitWord &other);
    bool operator==(const BitWord &other) const = default;
    std::strong_ordering operator<=>(const BitWord &other) const;

   private:
    uint32_t bits_ = 0;
    uint8_t p_ = 0;
};

/// Inner product over Z_2.
bool dot(const BitWord &a, const BitWord &b);

/// One affine constraint `coeffs . x = rhs`.
struct AffineConstraint {
    BitWord coeffs;
    bool rhs;
};

/// Lex-smallest solution of the system, or nullopt if it is inconsistent.
std::optional<BitWord> solve_affine(int p, const std::vector<AffineConstraint> &constraints);

/// Subgroup of (Z_2^p, xor) stored by a canonical basis: fully reduced
/// echelon form, pivot = leading bit, sorted by pivot (highest first).
class BitSubgroup {
   public:
    BitSubgroup() = default;
    explicit BitSubgroup(int p) : p_(p) {}

    static BitSubgroup span(int p, const std::vector<BitWord> &gens);
    static BitSubgroup full(int p);

    int p() const { return p_; }
    int rank() const { return (int)basis_.size(); }
    uint64_t size() const { return uint64_t{1} << basis_.size(); }
    const std::vector<BitWord> &basis() const { return basis_; }
    /// Basis with ascending order (used by labels).
    std::vector<BitWord> ascending_basis() const;

    bool contains(const BitWord &w) const;
    /// Reduces `w` against the basis. Zero iff `w` is a member.
    BitWord reduce(const BitWord &w) const;
    /// Members, sorted ascending.
    std::vector<BitWord> elements() const;
    /// Index-2 subgroups, sorted by canonical basis.
    std::vector<BitSubgroup> maximal_subgroups() const;
    /// {x : x . g = 0 for all g in this}.
    BitSubgroup orthogonal() const;
    bool is_subgroup_of(const BitSubgroup &other) const;

    bool operator==(const BitSubgroup &other) const = default;
    auto operator<=>(const BitSubgroup &other) const = default;

   private:
    void insert(BitWord w);
    int p_ = 0;
    std::vector<BitWord> basis_;
};

struct Coset {
    BitWord leader;  // lex-smallest member
    std::vector<BitWord> elements;
};

/// Cosets of `h` in `g`, ordered by leader. Requires h to be a subgroup of g.
std::vector<Coset> cosets(const BitSubgroup &h, const BitSubgroup &g);

namespace detail {

/// Affine solver over words of up to 64 bits with the same lex order
/// (most significant bit first).
std::optional<uint64_t> solve_affine_u64(
    int nbits, const std::vector<std::pair<uint64_t, bool>> &constraints);

/// Rank of a set of words of up to 64 bits.
int rank_u64(std::vector<uint64_t> rows);

}  // namespace detail

}  // namespace qap
