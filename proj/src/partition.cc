#include "qap/partition.h"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "qap/errors.h"

namespace qap {

namespace {

constexpr uint32_t kNoCell = 0xFFFFFFFF;
constexpr int kMaxQapBits = 10;

inline bool anticommute_codes(int p, uint32_t a, uint32_t b) {
    uint32_t mask = (uint32_t{1} << p) - 1;
    uint32_t x = ((a & mask) & (b >> p)) ^ ((a >> p) & (b & mask));
    return std::popcount(x) & 1;
}

std::string describe(const Spinor &s, CellId id) {
    return s.str() + " (" + id.key() + ")";
}

bool is_closed(const SpinorSet &s) {
    return SpinorSet::span(s.p(), s.elements()) == s;
}

}  // namespace

std::string CellId::key() const {
    return "B:" + std::to_string(index) + "/eps:" + std::to_string(eps);
}

const char *pair_kind_name(PairKind k) {
    switch (k) {
        case PairKind::degrade:
            return "degrade";
        case PairKind::irregular:
            return "irregular";
        default:
            return "regular";
    }
}

// ---- QAPartition ----

QAPartition::QAPartition(CartanSubalgebra cartan, std::vector<SpinorSet> cells)
    : group_(cartan), cells_(std::move(cells)) {
    int p = cartan.p();
    if (p > kMaxQapBits) {
        throw ResourceError("quotient algebra partition limited to p <= 10");
    }
    if (cells_.size() != (size_t{2} << p)) {
        throw ContractError("partition needs 2^{p+1} cells");
    }
    eps_of_.assign(size_t{1} << (2 * p), 255);
    for (size_t k = 0; k < cells_.size(); k++) {
        for (const auto &s : cells_[k]) {
            eps_of_[s.code()] = (uint8_t)(k & 1);
        }
    }
}

CellId QAPartition::locate(const Spinor &s) const {
    uint8_t e = eps_of_.at(s.code());
    if (e == 255) {
        throw InvariantError("spinor " + s.str() + " is in no cell");
    }
    return CellId{commuting_index(s, cartan()), e};
}

QAPartition QAPartition::with_flipped_label(uint32_t index) const {
    auto cells = cells_;
    std::swap(cells.at(2 * index), cells.at(2 * index + 1));
    return QAPartition(cartan(), std::move(cells));
}

// ---- construction ----

ConjugatePair conjugate_pair_of(const CartanSubalgebra &c, const BiSubalgebra &b) {
    int p = c.p();
    if (!(b.parent() == c) || !b.elements().is_subset_of(c.base())) {
        throw ContractError("conjugate_pair_of: bi-subalgebra does not belong to this Cartan subalgebra");
    }
    if (b.elements() == c.base()) {
        return ConjugatePair{b, c.base(), SpinorSet(p)};
    }
    if (b.size() * 2 != c.base().size() || !is_closed(b.elements())) {
        throw ContractError("conjugate_pair_of: bi-subalgebra is not maximal");
    }
    // Solve omega(s, g_j) = index bit j for a representative s.
    uint32_t idx = b.index();
    std::vector<std::pair<uint64_t, bool>> rows;
    for (int j = 0; j < p; j++) {
        const Spinor &g = c.index_basis()[j];
        rows.emplace_back(((uint64_t)g.zeta_bits() << p) | g.alpha_bits(), (idx >> (p - 1 - j)) & 1);
    }
    auto rep = detail::solve_affine_u64(2 * p, rows);
    if (!rep) {
        throw InvariantError("character system unsolvable");
    }
    Spinor s = Spinor::from_code(p, (uint32_t)*rep);
    std::vector<Spinor> pair;
    for (const auto &x : c.base()) {
        pair.push_back(bi_add(s, x));
    }
    SpinorSet all(p, std::move(pair));
    Spinor s0 = all[0];
    std::vector<Spinor> w, w_hat;
    for (const auto &t : all) {
        (b.contains(bi_add(s0, t)) ? w : w_hat).push_back(t);
    }
    return ConjugatePair{b, SpinorSet(p, std::move(w)), SpinorSet(p, std::move(w_hat))};
}

QAPartition build_qap(const CartanSubalgebra &c) {
    int p = c.p();
    if (p > kMaxQapBits) {
        throw ResourceError("quotient algebra partition limited to p <= 10");
    }
    MaxBiGroup group(c);
    uint32_t n = uint32_t{1} << p;
    std::vector<SpinorSet> cells(2 * n, SpinorSet(p));
    cells[1] = c.base();
    std::vector<ConjugatePair> pairs(n);
    for (uint32_t i = 1; i < n; i++) {
        pairs[i] = conjugate_pair_of(c, group[i]);
    }
    for (uint32_t i = 1; i < n; i++) {
        const auto &pr = pairs[i];
        if (std::has_single_bit(i)) {
            cells[2 * i + 1] = pr.w;
            cells[2 * i] = pr.w_hat;
            continue;
        }
        uint32_t a = i & (~i + 1);
        uint32_t b = i ^ a;
        const Spinor &s = cells[2 * a + 1][0];
        std::optional<Spinor> t;
        for (const auto &x : cells[2 * b + 1]) {
            if (!commutes(s, x)) {
                t = x;
                break;
            }
        }
        if (!t) {
            throw InvariantError("no anti-commuting partner while propagating labels");
        }
        bool in_w = pr.w.contains(bi_add(s, *t));
        cells[2 * i] = in_w ? pr.w : pr.w_hat;
        cells[2 * i + 1] = in_w ? pr.w_hat : pr.w;
    }
    QAPartition q(c, std::move(cells));
    auto rep = verify_closure(q);
    if (!rep.pass) {
        throw InvariantError("label propagation inconsistent: " + rep.witness);
    }
    return q;
}

// ---- verification ----

ClosureReport verify_closure(const QAPartition &q) {
    ClosureReport rep;
    int p = q.p();
    const auto &c = q.cartan();
    uint32_t total = uint32_t{1} << (2 * p);
    uint32_t n = uint32_t{1} << p;
    std::vector<uint32_t> cell_of(total, kNoCell);
    auto fail = [&](std::string w) {
        rep.pass = false;
        rep.witness = std::move(w);
        return rep;
    };
    if (!(q.cell(0, 1) == c.base()) || !q.cell(0, 0).empty()) {
        return fail("degrade pair is not (C, empty)");
    }
    for (uint32_t i = 0; i < n; i++) {
        for (int e = 0; e < 2; e++) {
            const auto &cell = q.cell(i, e);
            if (i && cell.size() != n / 2) {
                return fail("cell " + CellId{i, e}.key() + " has " + std::to_string(cell.size()) + " elements");
            }
            for (const auto &s : cell) {
                if (cell_of[s.code()] != kNoCell) {
                    return fail(s.str() + " lies in two cells");
                }
                if (commuting_index(s, c) != i) {
                    return fail(describe(s, {i, e}) + " does not commute with its determinant");
                }
                cell_of[s.code()] = 2 * i + e;
            }
        }
    }
    for (uint32_t code = 0; code < total; code++) {
        if (cell_of[code] == kNoCell) {
            return fail(Spinor::from_code(p, code).str() + " lies in no cell");
        }
    }
    for (uint32_t a = 0; a < total; a++) {
        for (uint32_t b = a + 1; b < total; b++) {
            if (!anticommute_codes(p, a, b)) {
                continue;
            }
            rep.pairs_checked++;
            uint32_t expect = cell_of[a] ^ cell_of[b];
            uint32_t got = cell_of[a ^ b];
            if (expect != got) {
                CellId ca{cell_of[a] / 2, (int)(cell_of[a] & 1)};
                CellId cb{cell_of[b] / 2, (int)(cell_of[b] & 1)};
                CellId ce{expect / 2, (int)(expect & 1)};
                CellId cg{got / 2, (int)(got & 1)};
                return fail(describe(Spinor::from_code(p, a), ca) + " x " + describe(Spinor::from_code(p, b), cb) +
                            " -> " + describe(Spinor::from_code(p, a ^ b), cg) + ", expected " + ce.key());
            }
        }
    }
    return rep;
}

// ---- co-quotient ----

CoQuotientView coquotient_view(const QAPartition &q, CellId center) {
    uint32_t n = uint32_t{1} << q.p();
    if (center.index == 0 || center.index >= n || (center.eps != 0 && center.eps != 1)) {
        throw ContractError("co-quotient center must be a non-degrade conditioned subspace");
    }
    uint32_t l = center.index;
    int e = center.eps;
    CoQuotientView v{center, {}};
    v.pairs.push_back({PairKind::degrade, center, std::nullopt});
    v.pairs.push_back({PairKind::irregular, CellId{0, 1}, CellId{l, e ^ 1}});
    for (uint32_t m = 1; m < n; m++) {
        uint32_t m2 = m ^ l;
        if (m == l || m2 < m) {
            continue;
        }
        for (int a = 0; a < 2; a++) {
            v.pairs.push_back({PairKind::regular, CellId{m, a}, CellId{m2, a ^ e}});
        }
    }
    return v;
}

ClosureReport verify_coquotient(const QAPartition &q, const CoQuotientView &v) {
    ClosureReport rep;
    const auto &center = q.cell(v.center);
    auto fail = [&](std::string w) {
        rep.pass = false;
        rep.witness = std::move(w);
        return rep;
    };
    std::unordered_set<uint32_t> seen;
    auto claim = [&](CellId id) { return seen.insert(id.index * 2 + id.eps).second; };
    // Each side maps into the other under anti-commuting products with the center.
    auto into = [&](CellId from, CellId to) -> bool {
        const auto &x = q.cell(from);
        const auto &y = q.cell(to);
        for (const auto &s : x) {
            for (const auto &a : center) {
                if (commutes(s, a)) {
                    continue;
                }
                rep.pairs_checked++;
                if (!y.contains(bi_add(s, a))) {
                    rep.witness = describe(s, from) + " x " + describe(a, v.center) + " leaves " + to.key();
                    return false;
                }
            }
        }
        return true;
    };
    for (const auto &pr : v.pairs) {
        if (!claim(pr.first) || (pr.second && !claim(*pr.second))) {
            return fail("cell used twice in the re-pairing");
        }
        if (!pr.second) {
            for (const auto &s : q.cell(pr.first)) {
                for (const auto &t : center) {
                    if (!commutes(s, t)) {
                        return fail("degrade cell is not abelian at " + s.str());
                    }
                }
            }
            continue;
        }
        if (!into(pr.first, *pr.second) || !into(*pr.second, pr.first)) {
            rep.pass = false;
            return rep;
        }
    }
    if (seen.size() != (size_t{2} << q.p()) - 1) {
        return fail("re-pairing does not cover every non-empty cell");
    }
    return rep;
}

CommutationSplit split_by_commutation(const SpinorSet &w1, const SpinorSet &w2) {
    CommutationSplit out{SpinorSet(w1.p()), SpinorSet(w1.p()), std::nullopt};
    if (w2.empty()) {
        out.commuting = w1;
        return out;
    }
    const Spinor &t0 = w2[0];
    std::vector<Spinor> x, y;
    for (const auto &s : w1) {
        (commutes(s, t0) ? x : y).push_back(s);
    }
    out.commuting = SpinorSet(w1.p(), x);
    out.anticommuting = SpinorSet(w1.p(), y);
    for (const auto &t : w2) {
        bool flip = !x.empty() ? !commutes(t, x[0]) : commutes(t, y[0]);
        for (const auto &s : x) {
            if (commutes(s, t) == flip) {
                out.error = t.str() + " splits " + s.str() + " against the reference half";
                return out;
            }
        }
        for (const auto &s : y) {
            if (commutes(s, t) != flip) {
                out.error = t.str() + " splits " + s.str() + " against the reference half";
                return out;
            }
        }
    }
    return out;
}

CartanSubalgebra union_is_cartan(const BiSubalgebra &b, const SpinorSet &w) {
    return CartanSubalgebra::from_set(b.elements().united(w));
}

// ---- decomposition sequences ----

DecompositionSequence DecompositionSequence::from_cells(const QAPartition &q, const std::vector<CellId> &cells) {
    DecompositionSequence seq{q.cartan(), {}};
    for (const auto &id : cells) {
        seq.steps.push_back(q.cell(id));
    }
    if (auto err = check_sequence(seq); !err.empty()) {
        throw ContractError("invalid decomposition sequence: " + err);
    }
    return seq;
}

std::string check_sequence(const DecompositionSequence &seq) {
    const auto &c = seq.center;
    if (!c.valid()) {
        return "missing center";
    }
    int p = c.p();
    if ((int)seq.steps.size() != p) {
        return "expected " + std::to_string(p) + " steps, got " + std::to_string(seq.steps.size());
    }
    std::vector<BitWord> indices;
    for (size_t r = 0; r < seq.steps.size(); r++) {
        const auto &step = seq.steps[r];
        std::string where = "step " + std::to_string(r + 1) + ": ";
        if (step.size() != (size_t{1} << (p - 1)) || step.p() != p) {
            return where + "not a non-degrade conditioned subspace";
        }
        uint32_t idx = commuting_index(step[0], c);
        if (idx == 0) {
            return where + "lies in the center";
        }
        const Spinor &s0 = step[0];
        BiSubalgebra det = commuting_bisubalgebra(s0, c);
        for (const auto &s : step) {
            if (commuting_index(s, c) != idx) {
                return where + "elements commute with different bi-subalgebras";
            }
            if (!det.contains(bi_add(s0, s))) {
                return where + "not a coset of its determinant";
            }
        }
        indices.emplace_back(p, idx);
    }
    if (BitSubgroup::span(p, indices).rank() != p) {
        return "determinant indices are not independent";
    }
    return "";
}

}  // namespace qap
