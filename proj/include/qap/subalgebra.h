#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qap/bitcore.h"
#include "qap/spinor.h"

namespace qap {

/// Sorted, duplicate-free set of spinors of one width.
class SpinorSet {
   public:
    SpinorSet() = default;
    explicit SpinorSet(int p) : p_(p) {}
    SpinorSet(int p, std::vector<Spinor> elements);

    /// Closure of `gens` under bi_add (identity included).
    static SpinorSet span(int p, const std::vector<Spinor> &gens);

    int p() const { return p_; }
    size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    bool contains(const Spinor &s) const;
    const std::vector<Spinor> &elements() const { return elements_; }
    const Spinor &operator[](size_t k) const { return elements_[k]; }
    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }

    SpinorSet united(const SpinorSet &o) const;
    SpinorSet intersected(const SpinorSet &o) const;
    SpinorSet minus(const SpinorSet &o) const;
    bool is_subset_of(const SpinorSet &o) const;

    /// Comma-separated display forms.
    std::string str() const;

    bool operator==(const SpinorSet &) const = default;
    auto operator<=>(const SpinorSet &) const = default;

   private:
    int p_ = 0;
    std::vector<Spinor> elements_;
};

/// Maximal abelian subalgebra of su(2^p) in spinor form. Immutable; copies
/// share state. Identity is the sorted element list.
class CartanSubalgebra {
   public:
    CartanSubalgebra() = default;

    static CartanSubalgebra intrinsic(int p);
    /// Closure of the generators with the matching diagonal kernel.
    static CartanSubalgebra from_generators(const std::vector<Spinor> &gens);
    /// Validates `s` with is_cartan.
    static CartanSubalgebra from_set(const SpinorSet &s);
    static CartanSubalgebra parse(std::string_view label);

    int p() const;
    int kind() const;
    const SpinorSet &base() const;
    bool contains(const Spinor &s) const { return base().contains(s); }

    /// [alpha]_k
    const BitSubgroup &alpha_group() const;
    /// [zeta]_q, span of all phase strings.
    const BitSubgroup &zeta_group() const;
    int q() const { return zeta_group().rank(); }
    /// [zeta_0]_{p-k}: phase strings of the diagonal members.
    const BitSubgroup &kernel() const;
    /// One generator per ascending alpha basis vector, with the lex-smallest
    /// phase string in its coset.
    const std::vector<Spinor> &generators() const;
    /// eps_rs = zeta_r . alpha_s
    const std::vector<std::vector<bool>> &parity_table() const;
    /// p members in reduced echelon form on (alpha << p | zeta), highest
    /// pivot first. Bit p-1-j of a bi-subalgebra index is 1 iff member j is
    /// excluded.
    const std::vector<Spinor> &index_basis() const;

    /// C^{eps}_{[alpha_1,...,alpha_k]}, or C_[0..0] for kind 0.
    std::string label() const;

    bool operator==(const CartanSubalgebra &o) const;
    bool valid() const { return d_ != nullptr; }

   private:
    struct Data;
    explicit CartanSubalgebra(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    static CartanSubalgebra derive(SpinorSet base);
    std::shared_ptr<const Data> d_;
};

CartanSubalgebra intrinsic_cartan(int p);
CartanSubalgebra build_kth_kind(const std::vector<Spinor> &gens);
CartanSubalgebra parse_label(std::string_view label);
bool is_cartan(const SpinorSet &s);
/// Swaps zeta and alpha on each element.
CartanSubalgebra dual_map(const CartanSubalgebra &c);

enum class BiFlavor { whole, bit_type, phase_type };
const char *flavor_name(BiFlavor f);

/// Maximal bi-subalgebra of a Cartan subalgebra (or the whole of it).
class BiSubalgebra {
   public:
    BiSubalgebra() = default;
    BiSubalgebra(CartanSubalgebra parent, SpinorSet elements, BiFlavor flavor);

    const CartanSubalgebra &parent() const { return parent_; }
    const SpinorSet &elements() const { return elements_; }
    BiFlavor flavor() const { return flavor_; }
    bool contains(const Spinor &s) const { return elements_.contains(s); }
    size_t size() const { return elements_.size(); }
    /// Position in the MaxBiGroup, read from index_basis membership.
    uint32_t index() const;

    bool operator==(const BiSubalgebra &o) const { return elements_ == o.elements_ && parent_ == o.parent_; }

   private:
    CartanSubalgebra parent_;
    SpinorSet elements_;
    BiFlavor flavor_ = BiFlavor::whole;
};

/// The 2^p maximal bi-subalgebras under sqcap; members[i].index() == i.
class MaxBiGroup {
   public:
    explicit MaxBiGroup(const CartanSubalgebra &parent);

    const CartanSubalgebra &parent() const { return parent_; }
    const std::vector<BiSubalgebra> &members() const { return members_; }
    const BiSubalgebra &operator[](uint32_t index) const { return members_.at(index); }
    size_t size() const { return members_.size(); }
    static uint32_t product(uint32_t a, uint32_t b) { return a ^ b; }

   private:
    CartanSubalgebra parent_;
    std::vector<BiSubalgebra> members_;
};

BiSubalgebra bit_type_maximal(const CartanSubalgebra &c, const BitSubgroup &sub);
BiSubalgebra phase_type_maximal(const CartanSubalgebra &c, const BitSubgroup &kernel_sub, uint32_t coset_choice);
MaxBiGroup all_maximal(const CartanSubalgebra &c);
BiSubalgebra sqcap(const BiSubalgebra &b1, const BiSubalgebra &b2);
/// The unique maximal B with [s, B] = 0; c itself iff s is in c.
BiSubalgebra commuting_bisubalgebra(const Spinor &s, const CartanSubalgebra &c);
/// Index of commuting_bisubalgebra(s, c) without building it.
uint32_t commuting_index(const Spinor &s, const CartanSubalgebra &c);

}  // namespace qap
