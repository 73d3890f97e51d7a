#include "qap/subalgebra.h"

#include <algorithm>
#include <bit>
#include <optional>
#include <unordered_set>

#include "qap/errors.h"

namespace qap {

// ---- SpinorSet ----

SpinorSet::SpinorSet(int p, std::vector<Spinor> elements) : p_(p), elements_(std::move(elements)) {
    for (const auto &s : elements_) {
        if (s.p() != p) {
            throw ContractError("spinor width mismatch in set");
        }
    }
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

SpinorSet SpinorSet::span(int p, const std::vector<Spinor> &gens) {
    std::vector<Spinor> out{Spinor::identity(p)};
    std::unordered_set<uint32_t> seen{0};
    for (const auto &g : gens) {
        if (g.p() != p) {
            throw ContractError("spinor width mismatch in span");
        }
        if (seen.count(g.code())) {
            continue;
        }
        size_t n = out.size();
        for (size_t k = 0; k < n; k++) {
            Spinor t = bi_add(out[k], g);
            seen.insert(t.code());
            out.push_back(t);
        }
    }
    return SpinorSet(p, std::move(out));
}

bool SpinorSet::contains(const Spinor &s) const {
    return std::binary_search(elements_.begin(), elements_.end(), s);
}

SpinorSet SpinorSet::united(const SpinorSet &o) const {
    std::vector<Spinor> out;
    std::set_union(begin(), end(), o.begin(), o.end(), std::back_inserter(out));
    return SpinorSet(p_ ? p_ : o.p_, std::move(out));
}

SpinorSet SpinorSet::intersected(const SpinorSet &o) const {
    std::vector<Spinor> out;
    std::set_intersection(begin(), end(), o.begin(), o.end(), std::back_inserter(out));
    return SpinorSet(p_, std::move(out));
}

SpinorSet SpinorSet::minus(const SpinorSet &o) const {
    std::vector<Spinor> out;
    std::set_difference(begin(), end(), o.begin(), o.end(), std::back_inserter(out));
    return SpinorSet(p_, std::move(out));
}

bool SpinorSet::is_subset_of(const SpinorSet &o) const {
    return std::includes(o.begin(), o.end(), begin(), end());
}

std::string SpinorSet::str() const {
    std::string out;
    for (size_t k = 0; k < elements_.size(); k++) {
        if (k) {
            out += ", ";
        }
        out += elements_[k].display();
    }
    return out;
}

// ---- CartanSubalgebra ----

struct CartanSubalgebra::Data {
    int p = 0;
    SpinorSet base;
    BitSubgroup alpha_group;
    BitSubgroup zeta_group;
    BitSubgroup kernel;
    std::vector<Spinor> generators;
    std::vector<std::vector<bool>> parity;
    std::vector<Spinor> index_basis;
};

namespace {

/// Reduced echelon basis of spinor codes, highest pivot first.
std::vector<uint32_t> echelon_codes(const std::vector<uint32_t> &codes) {
    std::vector<uint32_t> basis;
    for (uint32_t v : codes) {
        for (uint32_t b : basis) {
            if (v & std::bit_floor(b)) {
                v ^= b;
            }
        }
        if (!v) {
            continue;
        }
        uint32_t lead = std::bit_floor(v);
        for (auto &b : basis) {
            if (b & lead) {
                b ^= v;
            }
        }
        basis.insert(std::find_if(basis.begin(), basis.end(), [&](uint32_t b) { return b < v; }), v);
    }
    return basis;
}

void check_p(int p) {
    if (p < 1 || p > kMaxBits) {
        throw ContractError("p must be in [1, 16]");
    }
}

BiFlavor flavor_of(const CartanSubalgebra &c, const SpinorSet &elements) {
    if (elements.size() == c.base().size()) {
        return BiFlavor::whole;
    }
    for (const auto &nu : c.kernel().basis()) {
        if (!elements.contains(Spinor(nu, BitWord::zero(c.p())))) {
            return BiFlavor::phase_type;
        }
    }
    return BiFlavor::bit_type;
}

}  // namespace

CartanSubalgebra CartanSubalgebra::derive(SpinorSet base) {
    auto d = std::make_shared<Data>();
    int p = base.p();
    d->p = p;
    std::vector<uint32_t> codes;
    codes.reserve(base.size());
    std::vector<BitWord> alphas, zetas, diag;
    for (const auto &s : base) {
        codes.push_back(s.code());
    }
    for (uint32_t b : echelon_codes(codes)) {
        Spinor s = Spinor::from_code(p, b);
        d->index_basis.push_back(s);
        alphas.push_back(s.alpha());
        zetas.push_back(s.zeta());
    }
    for (const auto &s : base) {
        if (!s.is_diagonal()) {
            break;
        }
        diag.push_back(s.zeta());
    }
    d->alpha_group = BitSubgroup::span(p, alphas);
    d->zeta_group = BitSubgroup::span(p, zetas);
    d->kernel = BitSubgroup::span(p, diag);
    for (const auto &a : d->alpha_group.ascending_basis()) {
        // Elements sort by (alpha, zeta): the first hit has the smallest zeta.
        auto it = std::lower_bound(base.begin(), base.end(), Spinor(BitWord::zero(p), a));
        if (it == base.end() || it->alpha() != a) {
            throw InvariantError("alpha generator missing from base");
        }
        d->generators.push_back(*it);
    }
    size_t k = d->generators.size();
    d->parity.assign(k, std::vector<bool>(k));
    for (size_t r = 0; r < k; r++) {
        for (size_t s = 0; s < k; s++) {
            d->parity[r][s] = dot(d->generators[r].zeta(), d->generators[s].alpha());
        }
    }
    d->base = std::move(base);
    return CartanSubalgebra(std::move(d));
}

CartanSubalgebra CartanSubalgebra::intrinsic(int p) {
    check_p(p);
    std::vector<Spinor> gens;
    for (int r = 1; r <= p; r++) {
        gens.emplace_back(BitWord::unit(p, r), BitWord::zero(p));
    }
    return derive(SpinorSet::span(p, gens));
}

CartanSubalgebra CartanSubalgebra::from_generators(const std::vector<Spinor> &gens) {
    if (gens.empty()) {
        throw ContractError("build_kth_kind needs at least one generator; use intrinsic_cartan");
    }
    int p = gens[0].p();
    std::vector<BitWord> alphas;
    for (size_t i = 0; i < gens.size(); i++) {
        if (gens[i].p() != p) {
            throw ContractError("generator width mismatch");
        }
        for (size_t j = 0; j < i; j++) {
            if (!commutes(gens[i], gens[j])) {
                throw ContractError("generators " + gens[j].str() + " and " + gens[i].str() + " do not commute");
            }
        }
        alphas.push_back(gens[i].alpha());
    }
    BitSubgroup ag = BitSubgroup::span(p, alphas);
    if (ag.rank() != (int)gens.size()) {
        throw ContractError("generator alpha strings are dependent or zero");
    }
    std::vector<Spinor> all = gens;
    BitSubgroup ker = ag.orthogonal();
    for (const auto &nu : ker.basis()) {
        all.emplace_back(nu, BitWord::zero(p));
    }
    SpinorSet base = SpinorSet::span(p, all);
    if (base.size() != (size_t{1} << p)) {
        throw InvariantError("generated set has wrong size");
    }
    return derive(std::move(base));
}

bool is_cartan(const SpinorSet &s) {
    int p = s.p();
    if (p < 1 || p > kMaxBits || s.size() != (size_t{1} << p)) {
        return false;
    }
    if (!s.contains(Spinor::identity(p))) {
        return false;
    }
    std::vector<uint32_t> codes;
    for (const auto &x : s) {
        codes.push_back(x.code());
    }
    auto basis = echelon_codes(codes);
    // 2^p distinct members inside a rank-p span: the set is the span.
    if ((int)basis.size() != p) {
        return false;
    }
    std::vector<Spinor> gens;
    for (uint32_t b : basis) {
        gens.push_back(Spinor::from_code(p, b));
    }
    for (size_t i = 0; i < gens.size(); i++) {
        for (size_t j = i + 1; j < gens.size(); j++) {
            if (!commutes(gens[i], gens[j])) {
                return false;
            }
        }
    }
    if (p <= 4) {
        for (uint32_t code = 0; code < (uint32_t{1} << (2 * p)); code++) {
            Spinor t = Spinor::from_code(p, code);
            if (s.contains(t)) {
                continue;
            }
            if (std::all_of(gens.begin(), gens.end(), [&](const Spinor &g) { return commutes(g, t); })) {
                return false;
            }
        }
        return true;
    }
    // Commutant dimension is 2p - rank of the orthogonality system.
    std::vector<uint64_t> rows;
    for (const auto &g : gens) {
        // omega(t, g) = t.zeta . g.alpha + t.alpha . g.zeta, unknown t = (alpha << p | zeta)
        rows.push_back(((uint64_t)g.zeta_bits() << p) | g.alpha_bits());
    }
    return detail::rank_u64(rows) == p;
}

CartanSubalgebra CartanSubalgebra::from_set(const SpinorSet &s) {
    if (!is_cartan(s)) {
        throw ContractError("set is not a Cartan subalgebra");
    }
    return derive(s);
}

int CartanSubalgebra::p() const {
    return d_->p;
}
int CartanSubalgebra::kind() const {
    return d_->alpha_group.rank();
}
const SpinorSet &CartanSubalgebra::base() const {
    return d_->base;
}
const BitSubgroup &CartanSubalgebra::alpha_group() const {
    return d_->alpha_group;
}
const BitSubgroup &CartanSubalgebra::zeta_group() const {
    return d_->zeta_group;
}
const BitSubgroup &CartanSubalgebra::kernel() const {
    return d_->kernel;
}
const std::vector<Spinor> &CartanSubalgebra::generators() const {
    return d_->generators;
}
const std::vector<std::vector<bool>> &CartanSubalgebra::parity_table() const {
    return d_->parity;
}
const std::vector<Spinor> &CartanSubalgebra::index_basis() const {
    return d_->index_basis;
}

bool CartanSubalgebra::operator==(const CartanSubalgebra &o) const {
    if (d_ == o.d_) {
        return true;
    }
    if (!d_ || !o.d_) {
        return false;
    }
    return d_->base == o.d_->base;
}

std::string CartanSubalgebra::label() const {
    int k = kind();
    if (k == 0) {
        return "C_[" + std::string(p(), '0') + "]";
    }
    std::string eps;
    for (int r = 0; r < k; r++) {
        for (int s = r; s < k; s++) {
            eps += d_->parity[r][s] ? '1' : '0';
        }
    }
    std::string out = "C^{" + eps + "}_{[";
    for (int r = 0; r < k; r++) {
        out += (r ? "," : "") + d_->generators[r].alpha().str();
    }
    return out + "]}";
}

namespace {

struct LabelParser {
    std::string_view text;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string &what) const {
        throw ContractError("label parse error at position " + std::to_string(pos) + ": " + what + " in '" +
                            std::string(text) + "'");
    }
    bool peek(char c) const { return pos < text.size() && text[pos] == c; }
    void expect(char c) {
        if (!peek(c)) {
            fail(std::string("expected '") + c + "'");
        }
        pos++;
    }
    std::string bits() {
        size_t start = pos;
        while (pos < text.size() && (text[pos] == '0' || text[pos] == '1')) {
            pos++;
        }
        if (pos == start) {
            fail("expected a bit string");
        }
        return std::string(text.substr(start, pos - start));
    }
    std::string maybe_braced_bits() {
        if (peek('{')) {
            pos++;
            auto b = bits();
            expect('}');
            return b;
        }
        return bits();
    }
    std::vector<std::string> bracket_list() {
        bool braced = peek('{');
        if (braced) {
            pos++;
        }
        expect('[');
        std::vector<std::string> out{bits()};
        while (peek(',')) {
            pos++;
            out.push_back(bits());
        }
        expect(']');
        if (braced) {
            expect('}');
        }
        return out;
    }
};

}  // namespace

CartanSubalgebra CartanSubalgebra::parse(std::string_view label) {
    LabelParser ps{label};
    ps.expect('C');
    std::string eps;
    bool has_eps = ps.peek('^');
    if (has_eps) {
        ps.pos++;
        eps = ps.maybe_braced_bits();
    }
    ps.expect('_');
    auto alphas = ps.bracket_list();
    if (ps.pos != label.size()) {
        ps.fail("trailing characters");
    }
    int p = (int)alphas[0].size();
    for (const auto &a : alphas) {
        if ((int)a.size() != p) {
            ps.fail("alpha strings differ in length");
        }
    }
    if (p > kMaxBits) {
        ps.fail("more than 16 bits");
    }
    if (!has_eps) {
        if (alphas.size() != 1 || alphas[0].find('1') != std::string::npos) {
            ps.fail("kind-0 label must be C_[0...0]");
        }
        return intrinsic(p);
    }
    size_t k = alphas.size();
    if (eps.size() != k * (k + 1) / 2) {
        ps.fail("expected " + std::to_string(k * (k + 1) / 2) + " parity bits, got " + std::to_string(eps.size()));
    }
    std::vector<BitWord> a;
    for (const auto &s : alphas) {
        a.push_back(BitWord::from_string(s));
    }
    std::vector<std::vector<bool>> table(k, std::vector<bool>(k));
    size_t at = 0;
    for (size_t r = 0; r < k; r++) {
        for (size_t s = r; s < k; s++) {
            table[r][s] = table[s][r] = eps[at++] == '1';
        }
    }
    std::vector<Spinor> gens;
    for (size_t r = 0; r < k; r++) {
        std::vector<AffineConstraint> rows;
        for (size_t s = 0; s < k; s++) {
            rows.push_back({a[s], table[r][s]});
        }
        auto z = solve_affine(p, rows);
        if (!z) {
            ps.fail("alpha strings are dependent");
        }
        gens.emplace_back(*z, a[r]);
    }
    return from_generators(gens);
}

CartanSubalgebra intrinsic_cartan(int p) {
    return CartanSubalgebra::intrinsic(p);
}
CartanSubalgebra build_kth_kind(const std::vector<Spinor> &gens) {
    return CartanSubalgebra::from_generators(gens);
}
CartanSubalgebra parse_label(std::string_view label) {
    return CartanSubalgebra::parse(label);
}

CartanSubalgebra dual_map(const CartanSubalgebra &c) {
    std::vector<Spinor> out;
    for (const auto &s : c.base()) {
        out.emplace_back(s.alpha(), s.zeta());
    }
    return CartanSubalgebra::from_set(SpinorSet(c.p(), std::move(out)));
}

// ---- bi-subalgebras ----

const char *flavor_name(BiFlavor f) {
    switch (f) {
        case BiFlavor::whole:
            return "whole";
        case BiFlavor::bit_type:
            return "bit_type";
        default:
            return "phase_type";
    }
}

BiSubalgebra::BiSubalgebra(CartanSubalgebra parent, SpinorSet elements, BiFlavor flavor)
    : parent_(std::move(parent)), elements_(std::move(elements)), flavor_(flavor) {
}

uint32_t BiSubalgebra::index() const {
    const auto &basis = parent_.index_basis();
    int p = parent_.p();
    uint32_t idx = 0;
    for (int j = 0; j < p; j++) {
        if (!elements_.contains(basis[j])) {
            idx |= uint32_t{1} << (p - 1 - j);
        }
    }
    return idx;
}

BiSubalgebra bit_type_maximal(const CartanSubalgebra &c, const BitSubgroup &sub) {
    const auto &ag = c.alpha_group();
    if (ag.rank() == 0 || sub.rank() != ag.rank() - 1 || !sub.is_subgroup_of(ag)) {
        throw ContractError("bit_type_maximal: subgroup is not maximal in the alpha group");
    }
    std::vector<Spinor> out;
    for (const auto &s : c.base()) {
        if (sub.contains(s.alpha())) {
            out.push_back(s);
        }
    }
    return BiSubalgebra(c, SpinorSet(c.p(), std::move(out)), BiFlavor::bit_type);
}

BiSubalgebra phase_type_maximal(const CartanSubalgebra &c, const BitSubgroup &kernel_sub, uint32_t coset_choice) {
    const auto &ker = c.kernel();
    if (ker.rank() == 0 || kernel_sub.rank() != ker.rank() - 1 || !kernel_sub.is_subgroup_of(ker)) {
        throw ContractError("phase_type_maximal: subgroup is not maximal in the diagonal kernel");
    }
    int p = c.p();
    int k = c.kind();
    if (coset_choice >> k) {
        throw ContractError("phase_type_maximal: coset choice has more than k bits");
    }
    BitWord y0;
    for (const auto &nu : ker.elements()) {
        if (!kernel_sub.contains(nu)) {
            y0 = nu;
            break;
        }
    }
    Spinor shift(y0, BitWord::zero(p));
    std::vector<Spinor> gens;
    for (const auto &nu : kernel_sub.basis()) {
        gens.emplace_back(nu, BitWord::zero(p));
    }
    for (int i = 0; i < k; i++) {
        const Spinor &g = c.generators()[i];
        gens.push_back(((coset_choice >> i) & 1) ? bi_add(g, shift) : g);
    }
    return BiSubalgebra(c, SpinorSet::span(p, gens), BiFlavor::phase_type);
}

MaxBiGroup::MaxBiGroup(const CartanSubalgebra &parent) : parent_(parent) {
    int p = parent.p();
    std::vector<std::optional<BiSubalgebra>> slots(size_t{1} << p);
    auto place = [&](BiSubalgebra b) {
        uint32_t idx = b.index();
        if (slots[idx]) {
            if (!(*slots[idx] == b)) {
                throw InvariantError("two maximal bi-subalgebras share an index");
            }
            return;
        }
        slots[idx] = std::move(b);
    };
    place(BiSubalgebra(parent, parent.base(), BiFlavor::whole));
    for (const auto &sub : parent.alpha_group().maximal_subgroups()) {
        place(bit_type_maximal(parent, sub));
    }
    if (parent.kernel().rank() > 0) {
        for (const auto &ks : parent.kernel().maximal_subgroups()) {
            for (uint32_t ch = 0; ch < (uint32_t{1} << parent.kind()); ch++) {
                place(phase_type_maximal(parent, ks, ch));
            }
        }
    }
    for (auto &s : slots) {
        if (!s) {
            throw InvariantError("maximal bi-subalgebra group is incomplete");
        }
        members_.push_back(std::move(*s));
    }
}

MaxBiGroup all_maximal(const CartanSubalgebra &c) {
    return MaxBiGroup(c);
}

BiSubalgebra sqcap(const BiSubalgebra &b1, const BiSubalgebra &b2) {
    if (!(b1.parent() == b2.parent())) {
        throw ContractError("sqcap: different parents");
    }
    const auto &c = b1.parent();
    SpinorSet both = b1.elements().intersected(b2.elements());
    SpinorSet neither = c.base().minus(b1.elements().united(b2.elements()));
    SpinorSet out = both.united(neither);
    BiFlavor f = flavor_of(c, out);
    return BiSubalgebra(c, std::move(out), f);
}

uint32_t commuting_index(const Spinor &s, const CartanSubalgebra &c) {
    int p = c.p();
    uint32_t idx = 0;
    for (int j = 0; j < p; j++) {
        if (symplectic(s, c.index_basis()[j])) {
            idx |= uint32_t{1} << (p - 1 - j);
        }
    }
    return idx;
}

BiSubalgebra commuting_bisubalgebra(const Spinor &s, const CartanSubalgebra &c) {
    if (s.p() != c.p()) {
        throw ContractError("width mismatch");
    }
    // Cut the generating set: keep commuting generators, pair the
    // anti-commuting ones against the first of them.
    std::vector<Spinor> keep;
    std::optional<Spinor> pivot;
    for (const auto &g : c.index_basis()) {
        if (commutes(s, g)) {
            keep.push_back(g);
        } else if (!pivot) {
            pivot = g;
        } else {
            keep.push_back(bi_add(g, *pivot));
        }
    }
    if (!pivot) {
        return BiSubalgebra(c, c.base(), BiFlavor::whole);
    }
    SpinorSet b = SpinorSet::span(c.p(), keep);
    BiFlavor f = flavor_of(c, b);
    return BiSubalgebra(c, std::move(b), f);
}

}  // namespace qap
