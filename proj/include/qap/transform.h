#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qap/partition.h"
#include "qap/spinor.h"
#include "qap/subalgebra.h"

namespace qap {

/// h^zeta_alpha = (I + i(-i)^{zeta.alpha} S^zeta_alpha) / sqrt(2), or its
/// adjoint (I - i(-i)^{zeta.alpha} S) / sqrt(2).
class BasicTransform {
   public:
    BasicTransform() = default;
    BasicTransform(BitWord zeta, BitWord alpha, bool adjoint = false);
    /// "h[zeta|alpha]" or "h†[zeta|alpha]".
    static BasicTransform parse(std::string_view text);

    BitWord zeta() const { return spinor_.zeta(); }
    BitWord alpha() const { return spinor_.alpha(); }
    const Spinor &spinor() const { return spinor_; }
    bool adjoint() const { return adjoint_; }
    BasicTransform inverse() const { return BasicTransform(zeta(), alpha(), !adjoint_); }
    /// Acts on a single tensor factor.
    bool is_local() const;
    std::string str() const;

    bool operator==(const BasicTransform &) const = default;

   private:
    Spinor spinor_;
    bool adjoint_ = false;
};

/// h s h^dagger.
PhasedSpinor conjugate(const BasicTransform &h, const PhasedSpinor &s);
/// h^dagger s h.
PhasedSpinor conjugate_inverse(const BasicTransform &h, const PhasedSpinor &s);
/// sqrt(2) * h as an exact matrix. Throws ResourceError when p > 6.
ExactMatrix unnormalized_matrix(const BasicTransform &h);

/// Product of basic transformations, stored in written order; the last
/// factor acts first.
class SymbolicCircuit {
   public:
    SymbolicCircuit() = default;
    explicit SymbolicCircuit(std::vector<BasicTransform> factors) : factors_(std::move(factors)) {}
    static SymbolicCircuit parse(std::string_view text);

    const std::vector<BasicTransform> &factors() const { return factors_; }
    size_t size() const { return factors_.size(); }
    bool empty() const { return factors_.empty(); }
    bool is_local() const;

    PhasedSpinor apply(const PhasedSpinor &s) const;
    SymbolicCircuit inverse() const;
    /// (a * b) applies b first, then a.
    SymbolicCircuit operator*(const SymbolicCircuit &rhs) const;
    std::string str() const;

    bool operator==(const SymbolicCircuit &) const = default;

   private:
    std::vector<BasicTransform> factors_;
};

SpinorSet apply_circuit(const SymbolicCircuit &q, const SpinorSet &x);
CartanSubalgebra apply_circuit(const SymbolicCircuit &q, const CartanSubalgebra &c);

SymbolicCircuit build_R(const CartanSubalgebra &c);
SymbolicCircuit build_P(const std::vector<SpinorSet> &images);
SymbolicCircuit build_exchange_step(const BitWord &src, const BitWord &dst, const std::vector<BitWord> &frozen);
SymbolicCircuit build_E(const std::vector<BitWord> &current);
/// Q = E P R; maps the sequence onto the referential one.
SymbolicCircuit connect(const DecompositionSequence &seq);

/// Intrinsic cell W^sigma_alpha = {S^zeta_alpha : zeta.alpha = 1 + sigma}.
SpinorSet intrinsic_cell(const BitWord &alpha, int sigma);
/// W^0 cells on the unit words 10..0, 010..0, ...
std::vector<SpinorSet> referential_cells(int p);

/// Random valid sequence over the cells of build_qap(c).
DecompositionSequence random_sequence(const QAPartition &q, std::mt19937_64 &rng);

}  // namespace qap
