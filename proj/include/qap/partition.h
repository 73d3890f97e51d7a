#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qap/subalgebra.h"

namespace qap {

struct ConjugatePair {
    BiSubalgebra determinant;
    SpinorSet w;
    SpinorSet w_hat;
};

/// (bi-subalgebra index, eps) address of a conditioned subspace.
struct CellId {
    uint32_t index = 0;
    int eps = 1;
    bool operator==(const CellId &) const = default;
    auto operator<=>(const CellId &) const = default;
    /// "B:<index>/eps:<eps>"
    std::string key() const;
};

/// Rank-zero quotient algebra partition: 2^{p+1} cells, cell (0,1) = C and
/// cell (0,0) = empty.
class QAPartition {
   public:
    /// Unchecked assembly; build_qap verifies before returning.
    QAPartition(CartanSubalgebra cartan, std::vector<SpinorSet> cells);

    const CartanSubalgebra &cartan() const { return group_.parent(); }
    const MaxBiGroup &group() const { return group_; }
    int p() const { return cartan().p(); }
    const SpinorSet &cell(CellId id) const { return cells_.at(id.index * 2 + id.eps); }
    const SpinorSet &cell(uint32_t index, int eps) const { return cell(CellId{index, eps}); }
    /// Cell holding s.
    CellId locate(const Spinor &s) const;

    /// Same partition with W^0/W^1 exchanged at `index`. Test hook.
    QAPartition with_flipped_label(uint32_t index) const;

   private:
    MaxBiGroup group_;
    std::vector<SpinorSet> cells_;
    std::vector<uint8_t> eps_of_;  // by spinor code
};

struct ClosureReport {
    bool pass = true;
    uint64_t pairs_checked = 0;
    std::string witness;
};

/// Membership by the constructive map; b = c gives the degrade pair.
ConjugatePair conjugate_pair_of(const CartanSubalgebra &c, const BiSubalgebra &b);
QAPartition build_qap(const CartanSubalgebra &c);
ClosureReport verify_closure(const QAPartition &q);

enum class PairKind { degrade, irregular, regular };
const char *pair_kind_name(PairKind k);

struct CoPair {
    PairKind kind;
    CellId first;
    std::optional<CellId> second;  // empty for the degrade pair
};

struct CoQuotientView {
    CellId center;
    std::vector<CoPair> pairs;
};

CoQuotientView coquotient_view(const QAPartition &q, CellId center);
/// Checks [X,A] within Y and [Y,A] within X for every pair {X,Y} against the center A.
ClosureReport verify_coquotient(const QAPartition &q, const CoQuotientView &v);

struct CommutationSplit {
    SpinorSet commuting;
    SpinorSet anticommuting;
    std::optional<std::string> error;
};

/// Splits w1 into the part commuting with all of w2 and the part
/// anti-commuting with all of w2.
CommutationSplit split_by_commutation(const SpinorSet &w1, const SpinorSet &w2);

/// b together with one of its conditioned subspaces, validated.
CartanSubalgebra union_is_cartan(const BiSubalgebra &b, const SpinorSet &w);

struct DecompositionSequence {
    CartanSubalgebra center;
    std::vector<SpinorSet> steps;

    /// Steps from cell ids of build_qap(center); validated.
    static DecompositionSequence from_cells(const QAPartition &q, const std::vector<CellId> &cells);
};

/// Empty string when valid, otherwise the violated invariant.
std::string check_sequence(const DecompositionSequence &seq);

}  // namespace qap
