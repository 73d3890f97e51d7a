#include "qap/extension.h"

#include <algorithm>
#include <set>

#include "qap/errors.h"
#include "qap/partition.h"

namespace qap {

size_t CartanAtlas::size() const {
    size_t n = 0;
    for (const auto &v : by_kind) {
        n += v.size();
    }
    return n;
}

std::vector<CartanSubalgebra> CartanAtlas::members() const {
    std::vector<CartanSubalgebra> out;
    for (const auto &v : by_kind) {
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

bool CartanAtlas::contains(const CartanSubalgebra &c) const {
    if (c.p() != p) {
        return false;
    }
    const auto &v = by_kind.at(c.kind());
    return std::binary_search(v.begin(), v.end(), c, [](const CartanSubalgebra &a, const CartanSubalgebra &b) {
        return a.base() < b.base();
    });
}

namespace {

/// Phase-type maximal bi-subalgebras of c, one per (kernel subgroup, choice).
std::vector<BiSubalgebra> phase_types(const CartanSubalgebra &c) {
    std::vector<BiSubalgebra> out;
    if (c.kernel().rank() == 0) {
        return out;
    }
    for (const auto &ks : c.kernel().maximal_subgroups()) {
        for (uint32_t ch = 0; ch < (uint32_t{1} << c.kind()); ch++) {
            out.push_back(phase_type_maximal(c, ks, ch));
        }
    }
    return out;
}

}  // namespace

std::vector<CartanSubalgebra> extend_shell(const CartanSubalgebra &c) {
    std::vector<CartanSubalgebra> out;
    int k = c.kind();
    for (const auto &b : phase_types(c)) {
        auto pair = conjugate_pair_of(c, b);
        for (const auto *w : {&pair.w, &pair.w_hat}) {
            CartanSubalgebra e = union_is_cartan(b, *w);
            if (e.kind() != k + 1) {
                throw InvariantError("extension of " + c.label() + " has kind " + std::to_string(e.kind()));
            }
            out.push_back(std::move(e));
        }
    }
    return out;
}

CartanAtlas enumerate_all(int p) {
    if (p < 1 || p > kMaxEnumerateBits) {
        throw ResourceError("enumerate_all is limited to 1 <= p <= 5");
    }
    CartanAtlas atlas;
    atlas.p = p;
    atlas.by_kind.resize(p + 1);
    atlas.by_kind[0].push_back(intrinsic_cartan(p));
    for (int k = 0; k < p; k++) {
        std::set<SpinorSet> seen;
        auto &next = atlas.by_kind[k + 1];
        for (const auto &c : atlas.by_kind[k]) {
            for (const auto &b : phase_types(c)) {
                auto pair = conjugate_pair_of(c, b);
                for (const auto *w : {&pair.w, &pair.w_hat}) {
                    SpinorSet u = b.elements().united(*w);
                    if (!seen.insert(u).second) {
                        continue;
                    }
                    CartanSubalgebra e = CartanSubalgebra::from_set(u);
                    if (e.kind() != k + 1) {
                        throw InvariantError("extension of " + c.label() + " changed kind by more than one");
                    }
                    next.push_back(std::move(e));
                }
            }
        }
        std::sort(next.begin(), next.end(),
                  [](const CartanSubalgebra &a, const CartanSubalgebra &b) { return a.base() < b.base(); });
    }
    for (int k = 0; k <= p; k++) {
        if (atlas.by_kind[k].size() != closed_form_count(p, k)) {
            throw InvariantError("kind " + std::to_string(k) + " count " + std::to_string(atlas.by_kind[k].size()) +
                                 " differs from closed form " + std::to_string(closed_form_count(p, k)));
        }
    }
    return atlas;
}

uint64_t closed_form_count(int p, int k) {
    if (p < 1 || p > 10 || k < 0 || k > p) {
        throw ContractError("closed_form_count needs 0 <= k <= p <= 10");
    }
    // Gaussian binomial [p choose k]_2 by the q-Pascal rule.
    std::vector<std::vector<uint64_t>> g(p + 1, std::vector<uint64_t>(p + 1, 0));
    for (int n = 0; n <= p; n++) {
        g[n][0] = 1;
        for (int j = 1; j <= n; j++) {
            g[n][j] = g[n - 1][j - 1] + (uint64_t{1} << j) * (j <= n - 1 ? g[n - 1][j] : 0);
        }
    }
    return (uint64_t{1} << (k * (k + 1) / 2)) * g[p][k];
}

uint64_t closed_form_total(int p) {
    uint64_t t = 1;
    for (int i = 1; i <= p; i++) {
        t *= (uint64_t{1} << i) + 1;
    }
    return t;
}

// ---- parities ----

ParityStrings parity_strings(const CartanSubalgebra &c) {
    ParityStrings out;
    const auto &t = c.parity_table();
    size_t k = t.size();
    for (size_t r = 0; r < k; r++) {
        out.se += t[r][r] ? '1' : '0';
    }
    for (size_t r = 0; r < k; r++) {
        for (size_t s = r + 1; s < k; s++) {
            out.mu += t[r][s] ? '1' : '0';
        }
    }
    return out;
}

ParityStrings mutual_parity(const CartanSubalgebra &c) {
    if (c.kind() != c.p()) {
        throw ContractError("mutual_parity needs a kind-p subalgebra; lift it first");
    }
    return parity_strings(c);
}

Lift local_lift(const CartanSubalgebra &c) {
    int p = c.p();
    Lift out{SymbolicCircuit(), c};
    while (out.lifted.kind() < p) {
        int k = out.lifted.kind();
        std::optional<BitWord> unit;
        for (int r = p; r >= 1; r--) {
            BitWord u = BitWord::unit(p, r);
            if (!out.lifted.alpha_group().contains(u)) {
                unit = u;
                break;
            }
        }
        if (!unit) {
            throw InvariantError("no admissible unit partitioning");
        }
        bool done = false;
        for (const BitWord &z : {BitWord::zero(p), *unit}) {
            SymbolicCircuit h({BasicTransform(z, *unit)});
            CartanSubalgebra next = apply_circuit(h, out.lifted);
            if (next.kind() == k + 1) {
                out.circuit = h * out.circuit;
                out.lifted = next;
                done = true;
                break;
            }
        }
        if (!done) {
            throw InvariantError("local rotation failed to raise the kind of " + out.lifted.label());
        }
    }
    return out;
}

SymbolicCircuit self_parity_normalizer(const CartanSubalgebra &c) {
    if (c.kind() != c.p()) {
        throw ContractError("self_parity_normalizer needs a kind-p subalgebra");
    }
    int p = c.p();
    std::vector<BasicTransform> out;
    const auto &gens = c.generators();
    for (int i = 0; i < p; i++) {
        if (self_parity(gens[i])) {
            out.emplace_back(gens[i].alpha(), BitWord::zero(p));
        }
    }
    return SymbolicCircuit(std::move(out));
}

CartanSubalgebra class_representative(int p, const std::string &mu) {
    if (mu.size() != (size_t)(p * (p - 1) / 2)) {
        throw ContractError("mutual parity string has the wrong length");
    }
    std::vector<BitWord> units;
    for (int r = p; r >= 1; r--) {
        units.push_back(BitWord::unit(p, r));
    }
    std::vector<uint32_t> zeta(p, 0);
    size_t at = 0;
    for (int i = 0; i < p; i++) {
        for (int j = i + 1; j < p; j++) {
            if (mu[at++] == '1') {
                zeta[i] |= units[j].bits();
                zeta[j] |= units[i].bits();
            }
        }
    }
    std::vector<Spinor> gens;
    for (int i = 0; i < p; i++) {
        gens.emplace_back(BitWord(p, zeta[i]), units[i]);
    }
    return build_kth_kind(gens);
}

Lift local_class_circuit(const CartanSubalgebra &c) {
    Lift up = local_lift(c);
    SymbolicCircuit se = self_parity_normalizer(up.lifted);
    Lift out{se * up.circuit, apply_circuit(se, up.lifted)};
    auto key = mutual_parity(up.lifted).mu;
    if (!(out.lifted == class_representative(c.p(), key))) {
        throw InvariantError("self parity normalization left " + out.lifted.label());
    }
    return out;
}

ClassIndex classify_local(const CartanAtlas &atlas) {
    ClassIndex out;
    auto all = atlas.members();
    for (size_t i = 0; i < all.size(); i++) {
        Lift l = local_class_circuit(all[i]);
        if (!l.circuit.is_local()) {
            throw InvariantError("local class circuit contains a non-local factor");
        }
        out[mutual_parity(l.lifted).mu].push_back(i);
    }
    return out;
}

Connector nonlocal_connector(const CartanSubalgebra &c1, const CartanSubalgebra &c2) {
    int p = c1.p();
    if (c2.p() != p || c1.kind() != p || c2.kind() != p) {
        throw ContractError("nonlocal_connector needs two kind-p subalgebras of equal width");
    }
    const auto &t1 = c1.parity_table();
    const auto &t2 = c2.parity_table();
    const auto &units = c1.generators();
    std::vector<BasicTransform> out;
    for (int i = 0; i < p; i++) {
        for (int j = i + 1; j < p; j++) {
            if (t1[i][j] != t2[i][j]) {
                out.emplace_back(units[i].alpha() ^ units[j].alpha(), BitWord::zero(p));
            }
        }
    }
    for (int i = 0; i < p; i++) {
        bool rho = false;
        for (int s = 0; s < p; s++) {
            rho ^= t1[i][s] != t2[i][s];
        }
        if (rho) {
            out.emplace_back(units[i].alpha(), BitWord::zero(p));
        }
    }
    Connector con{SymbolicCircuit(std::move(out)), c1};
    con.target = apply_circuit(con.circuit, c1);
    if (!(con.target == c2)) {
        throw InvariantError("connector reaches " + con.target.label() + " instead of " + c2.label());
    }
    return con;
}

}  // namespace qap
