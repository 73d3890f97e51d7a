#include "qap/transform.h"

#include <algorithm>
#include <bit>
#include <sstream>

#include "qap/errors.h"

namespace qap {

BasicTransform::BasicTransform(BitWord zeta, BitWord alpha, bool adjoint)
    : spinor_(zeta, alpha), adjoint_(adjoint) {
}

BasicTransform BasicTransform::parse(std::string_view text) {
    constexpr std::string_view dagger = "h†";
    bool adj = false;
    std::string_view rest;
    if (text.substr(0, 2) == "h[") {
        rest = text.substr(1);
    } else if (text.substr(0, dagger.size()) == dagger) {
        adj = true;
        rest = text.substr(dagger.size());
    } else {
        throw ContractError("not a basic transformation: '" + std::string(text) + "'");
    }
    Spinor s = Spinor::parse("S" + std::string(rest));
    return BasicTransform(s.zeta(), s.alpha(), adj);
}

bool BasicTransform::is_local() const {
    return std::popcount(spinor_.zeta_bits() | spinor_.alpha_bits()) == 1;
}

std::string BasicTransform::str() const {
    return std::string(adjoint_ ? "h†" : "h") + "[" + zeta().str() + "|" + alpha().str() + "]";
}

namespace {

/// Power of i in c = i (-i)^{zeta.alpha}, negated for the adjoint.
int coefficient_phase(const BasicTransform &h) {
    int ph = 1 + (self_parity(h.spinor()) ? 3 : 0);
    return h.adjoint() ? ph + 2 : ph;
}

}  // namespace

PhasedSpinor conjugate(const BasicTransform &h, const PhasedSpinor &s) {
    if (h.spinor().p() != s.body.p()) {
        throw ContractError("width mismatch");
    }
    if (commutes(h.spinor(), s.body)) {
        return s;
    }
    // h T h^dagger = c S T
    PhasedSpinor st = product(PhasedSpinor(h.spinor()), s);
    return PhasedSpinor(st.phase + coefficient_phase(h), st.body);
}

PhasedSpinor conjugate_inverse(const BasicTransform &h, const PhasedSpinor &s) {
    return conjugate(h.inverse(), s);
}

ExactMatrix unnormalized_matrix(const BasicTransform &h) {
    ExactMatrix s = to_matrix(PhasedSpinor(coefficient_phase(h), h.spinor()));
    return ExactMatrix::identity(s.dim()) + s;
}

// ---- SymbolicCircuit ----

SymbolicCircuit SymbolicCircuit::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<BasicTransform> out;
    std::string tok;
    while (in >> tok) {
        out.push_back(BasicTransform::parse(tok));
    }
    return SymbolicCircuit(std::move(out));
}

bool SymbolicCircuit::is_local() const {
    return std::all_of(factors_.begin(), factors_.end(), [](const BasicTransform &h) { return h.is_local(); });
}

PhasedSpinor SymbolicCircuit::apply(const PhasedSpinor &s) const {
    PhasedSpinor x = s;
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
        x = conjugate(*it, x);
    }
    return x;
}

SymbolicCircuit SymbolicCircuit::inverse() const {
    std::vector<BasicTransform> out;
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
        out.push_back(it->inverse());
    }
    return SymbolicCircuit(std::move(out));
}

SymbolicCircuit SymbolicCircuit::operator*(const SymbolicCircuit &rhs) const {
    auto out = factors_;
    out.insert(out.end(), rhs.factors_.begin(), rhs.factors_.end());
    return SymbolicCircuit(std::move(out));
}

std::string SymbolicCircuit::str() const {
    std::string out;
    for (size_t k = 0; k < factors_.size(); k++) {
        out += (k ? " " : "") + factors_[k].str();
    }
    return out;
}

SpinorSet apply_circuit(const SymbolicCircuit &q, const SpinorSet &x) {
    std::vector<Spinor> out;
    out.reserve(x.size());
    for (const auto &s : x) {
        out.push_back(q.apply(PhasedSpinor(s)).body);
    }
    return SpinorSet(x.p(), std::move(out));
}

CartanSubalgebra apply_circuit(const SymbolicCircuit &q, const CartanSubalgebra &c) {
    return CartanSubalgebra::from_set(apply_circuit(q, c.base()));
}

// ---- R, P, E ----

SpinorSet intrinsic_cell(const BitWord &alpha, int sigma) {
    int p = alpha.p();
    std::vector<Spinor> out;
    for (uint32_t z = 0; z < (uint32_t{1} << p); z++) {
        BitWord zeta(p, z);
        if (dot(zeta, alpha) == !sigma) {
            out.emplace_back(zeta, alpha);
        }
    }
    return SpinorSet(p, std::move(out));
}

std::vector<SpinorSet> referential_cells(int p) {
    std::vector<SpinorSet> out;
    for (int r = 1; r <= p; r++) {
        out.push_back(intrinsic_cell(BitWord::unit(p, r), 0));
    }
    return out;
}

SymbolicCircuit build_R(const CartanSubalgebra &c) {
    int p = c.p();
    const auto &gens = c.generators();
    size_t k = gens.size();
    std::vector<BasicTransform> out;
    for (size_t j = 0; j < k; j++) {
        std::vector<AffineConstraint> rows;
        for (size_t i = 0; i < k; i++) {
            bool rhs = (i == j) ^ dot(gens[i].zeta(), gens[j].alpha());
            rows.push_back({gens[i].alpha(), rhs});
        }
        auto z = solve_affine(p, rows);
        if (!z) {
            throw InvariantError("diagonalizing system unsolvable");
        }
        out.emplace_back(*z, gens[j].alpha());
    }
    // Factors commute; written order lists the last generator first.
    std::reverse(out.begin(), out.end());
    SymbolicCircuit r(std::move(out));
    if (!(apply_circuit(r, c.base()) == intrinsic_cartan(p).base())) {
        throw InvariantError("R does not diagonalize " + c.label());
    }
    return r;
}

namespace {

/// Common alpha and sigma of an intrinsic cell.
std::pair<BitWord, int> intrinsic_cell_shape(const SpinorSet &cell) {
    if (cell.empty()) {
        throw ContractError("empty cell");
    }
    BitWord a = cell[0].alpha();
    int sigma = self_parity(cell[0]) ? 0 : 1;
    if (a.is_zero() || !(cell == intrinsic_cell(a, sigma))) {
        throw ContractError("not a conditioned subspace of the intrinsic partition");
    }
    return {a, sigma};
}

}  // namespace

SymbolicCircuit build_P(const std::vector<SpinorSet> &images) {
    if (images.empty()) {
        return {};
    }
    int p = images[0].p();
    std::vector<AffineConstraint> rows;
    std::vector<BitWord> alphas;
    for (const auto &cell : images) {
        auto [a, sigma] = intrinsic_cell_shape(cell);
        rows.push_back({a, sigma == 1});
        alphas.push_back(a);
    }
    if (BitSubgroup::span(p, alphas).rank() != (int)alphas.size()) {
        throw ContractError("build_P: partitionings are dependent");
    }
    auto eta = solve_affine(p, rows);
    if (!eta) {
        throw InvariantError("phase system unsolvable");
    }
    if (eta->is_zero()) {
        return {};
    }
    return SymbolicCircuit({BasicTransform(*eta, BitWord::zero(p))});
}

SymbolicCircuit build_exchange_step(const BitWord &src, const BitWord &dst, const std::vector<BitWord> &frozen) {
    if (src == dst) {
        throw ContractError("build_exchange_step: src equals dst");
    }
    int p = src.p();
    BitWord g = src ^ dst;
    auto eta = solve_affine(p, {{g, true}});
    if (!eta) {
        throw InvariantError("exchange system unsolvable");
    }
    std::vector<AffineConstraint> rows{
        {g, true},
        {src, !dot(*eta, src)},
        {dst, !dot(*eta, dst)},
    };
    for (const auto &f : frozen) {
        rows.push_back({f, dot(*eta, f)});
    }
    auto zeta = solve_affine(p, rows);
    if (!zeta) {
        throw ContractError("build_exchange_step: frozen constraints leave no solution");
    }
    return SymbolicCircuit({BasicTransform(*zeta, g), BasicTransform(*eta, g)});
}

SymbolicCircuit build_E(const std::vector<BitWord> &current) {
    if (current.empty()) {
        return {};
    }
    int p = current[0].p();
    if ((int)current.size() != p || BitSubgroup::span(p, current).rank() != p) {
        throw ContractError("build_E: need p independent partitionings");
    }
    std::vector<BitWord> alphas = current;
    std::vector<BitWord> frozen;
    SymbolicCircuit e;
    for (int r = 1; r <= p; r++) {
        BitWord beta = BitWord::unit(p, r);
        BitWord src = alphas[r - 1];
        if (src != beta) {
            SymbolicCircuit step = build_exchange_step(src, beta, frozen);
            BitWord g = src ^ beta;
            BitWord d = step.factors()[0].zeta() ^ step.factors()[1].zeta();
            for (auto &a : alphas) {
                if (dot(d, a)) {
                    a ^= g;
                }
            }
            e = step * e;
        }
        if (alphas[r - 1] != beta) {
            throw InvariantError("exchange step missed its target");
        }
        for (int i = 0; i < r - 1; i++) {
            if (alphas[i] != frozen[i]) {
                throw InvariantError("exchange step moved a settled cell");
            }
        }
        frozen.push_back(beta);
    }
    return e;
}

SymbolicCircuit connect(const DecompositionSequence &seq) {
    if (auto err = check_sequence(seq); !err.empty()) {
        throw ContractError("invalid decomposition sequence: " + err);
    }
    int p = seq.center.p();
    SymbolicCircuit r = build_R(seq.center);
    std::vector<SpinorSet> images;
    for (const auto &s : seq.steps) {
        images.push_back(apply_circuit(r, s));
    }
    SymbolicCircuit ph = build_P(images);
    std::vector<BitWord> alphas;
    for (auto &cell : images) {
        cell = apply_circuit(ph, cell);
        alphas.push_back(intrinsic_cell_shape(cell).first);
    }
    SymbolicCircuit e = build_E(alphas);
    SymbolicCircuit q = e * ph * r;
    if (!(apply_circuit(q, seq.center.base()) == intrinsic_cartan(p).base())) {
        throw InvariantError("connector does not map the center onto the intrinsic subalgebra");
    }
    auto ref = referential_cells(p);
    for (int k = 0; k < p; k++) {
        if (!(apply_circuit(q, seq.steps[k]) == ref[k])) {
            throw InvariantError("connector misses the referential cell at step " + std::to_string(k + 1));
        }
    }
    return q;
}

DecompositionSequence random_sequence(const QAPartition &q, std::mt19937_64 &rng) {
    int p = q.p();
    uint32_t n = uint32_t{1} << p;
    std::uniform_int_distribution<uint32_t> pick(1, n - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<CellId> cells;
    std::vector<BitWord> chosen;
    while ((int)cells.size() < p) {
        uint32_t idx = pick(rng);
        auto trial = chosen;
        trial.emplace_back(p, idx);
        if (BitSubgroup::span(p, trial).rank() != (int)trial.size()) {
            continue;
        }
        chosen = std::move(trial);
        cells.push_back(CellId{idx, coin(rng)});
    }
    return DecompositionSequence::from_cells(q, cells);
}

}  // namespace qap
