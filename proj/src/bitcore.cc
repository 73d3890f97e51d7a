#include "qap/bitcore.h"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "qap/errors.h"

namespace qap {

namespace {

void check_width(int p) {
    if (p < 1 || p > kMaxBits) {
        throw ContractError("bit width must be in [1, 16], got " + std::to_string(p));
    }
}

void check_same(const BitWord &a, const BitWord &b) {
    if (a.p() != b.p()) {
        throw ContractError("bit width mismatch: " + a.str() + " vs " + b.str());
    }
}

}  // namespace

BitWord::BitWord(int p, uint32_t bits) : bits_(bits), p_((uint8_t)p) {
    check_width(p);
    if (bits >> p) {
        throw ContractError("value does not fit in " + std::to_string(p) + " bits");
    }
}

BitWord BitWord::unit(int p, int r) {
    check_width(p);
    if (r < 1 || r > p) {
        throw ContractError("bit position out of range");
    }
    return BitWord(p, uint32_t{1} << (p - r));
}

BitWord BitWord::from_string(std::string_view text) {
    check_width((int)text.size());
    uint32_t v = 0;
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw ContractError("not a bit string: '" + std::string(text) + "'");
        }
        v = (v << 1) | (uint32_t)(c == '1');
    }
    return BitWord((int)text.size(), v);
}

bool BitWord::get(int r) const {
    if (r < 1 || r > p_) {
        throw ContractError("bit position out of range");
    }
    return (bits_ >> (p_ - r)) & 1;
}

int BitWord::weight() const {
    return std::popcount(bits_);
}

std::string BitWord::str() const {
    std::string out(p_, '0');
    for (int k = 0; k < p_; k++) {
        if ((bits_ >> (p_ - 1 - k)) & 1) {
            out[k] = '1';
        }
    }
    return out;
}

BitWord BitWord::operator^(const BitWord &other) const {
    check_same(*this, other);
    BitWord r = *this;
    r.bits_ ^= other.bits_;
    return r;
}

BitWord &BitWord::operator^=(const BitWord &other) {
    check_same(*this, other);
    bits_ ^= other.bits_;
    return *this;
}

std::strong_ordering BitWord::operator<=>(const BitWord &other) const {
    if (auto c = p_ <=> other.p_; c != 0) {
        return c;
    }
    return bits_ <=> other.bits_;
}

bool dot(const BitWord &a, const BitWord &b) {
    check_same(a, b);
    return std::popcount(a.bits() & b.bits()) & 1;
}

namespace detail {

std::optional<uint64_t> solve_affine_u64(
    int nbits, const std::vector<std::pair<uint64_t, bool>> &constraints) {
    // Pivot on the lowest set bit. With every free variable at zero this
    // gives the numerically smallest solution.
    struct Row {
        uint64_t c;
        bool r;
        int pivot;
    };
    std::vector<Row> rows;
    uint64_t mask = nbits >= 64 ? ~uint64_t{0} : (uint64_t{1} << nbits) - 1;
    for (auto [c, r] : constraints) {
        if (c & ~mask) {
            throw ContractError("constraint wider than the unknown");
        }
        for (const auto &row : rows) {
            if ((c >> row.pivot) & 1) {
                c ^= row.c;
                r ^= row.r;
            }
        }
        if (c == 0) {
            if (r) {
                return std::nullopt;
            }
            continue;
        }
        Row nr{c, r, std::countr_zero(c)};
        auto at = std::lower_bound(rows.begin(), rows.end(), nr.pivot,
                                   [](const Row &a, int piv) { return a.pivot < piv; });
        rows.insert(at, nr);
    }
    for (size_t i = 0; i < rows.size(); i++) {
        for (size_t j = 0; j < rows.size(); j++) {
            if (j != i && ((rows[j].c >> rows[i].pivot) & 1)) {
                rows[j].c ^= rows[i].c;
                rows[j].r ^= rows[i].r;
            }
        }
    }
    uint64_t x = 0;
    for (const auto &row : rows) {
        if (row.r) {
            x |= uint64_t{1} << row.pivot;
        }
    }
    return x;
}

int rank_u64(std::vector<uint64_t> rows) {
    int rank = 0;
    for (size_t i = 0; i < rows.size(); i++) {
        uint64_t v = rows[i];
        if (v == 0) {
            continue;
        }
        rank++;
        uint64_t low = v & (~v + 1);
        for (size_t j = i + 1; j < rows.size(); j++) {
            if (rows[j] & low) {
                rows[j] ^= v;
            }
        }
    }
    return rank;
}

}  // namespace detail

std::optional<BitWord> solve_affine(int p, const std::vector<AffineConstraint> &constraints) {
    check_width(p);
    std::vector<std::pair<uint64_t, bool>> raw;
    raw.reserve(constraints.size());
    for (const auto &k : constraints) {
        if (k.coeffs.p() != p) {
            throw ContractError("constraint width mismatch");
        }
        raw.emplace_back(k.coeffs.bits(), k.rhs);
    }
    auto x = detail::solve_affine_u64(p, raw);
    if (!x) {
        return std::nullopt;
    }
    return BitWord(p, (uint32_t)*x);
}

// ---- BitSubgroup ----

BitSubgroup BitSubgroup::span(int p, const std::vector<BitWord> &gens) {
    check_width(p);
    BitSubgroup g(p);
    for (const auto &w : gens) {
        if (w.p() != p) {
            throw ContractError("generator width mismatch");
        }
        g.insert(w);
    }
    return g;
}

BitSubgroup BitSubgroup::full(int p) {
    std::vector<BitWord> gens;
    for (int r = 1; r <= p; r++) {
        gens.push_back(BitWord::unit(p, r));
    }
    return span(p, gens);
}

BitWord BitSubgroup::reduce(const BitWord &w) const {
    if (w.p() != p_) {
        throw ContractError("width mismatch");
    }
    uint32_t v = w.bits();
    for (const auto &b : basis_) {
        uint32_t lead = std::bit_floor(b.bits());
        if (v & lead) {
            v ^= b.bits();
        }
    }
    return BitWord(p_, v);
}

void BitSubgroup::insert(BitWord w) {
    w = reduce(w);
    if (w.is_zero()) {
        return;
    }
    uint32_t lead = std::bit_floor(w.bits());
    for (auto &b : basis_) {
        if (b.bits() & lead) {
            b ^= w;
        }
    }
    auto at = std::find_if(basis_.begin(), basis_.end(),
                           [&](const BitWord &b) { return b.bits() < w.bits(); });
    basis_.insert(at, w);
}

bool BitSubgroup::contains(const BitWord &w) const {
    return reduce(w).is_zero();
}

std::vector<BitWord> BitSubgroup::ascending_basis() const {
    std::vector<BitWord> out = basis_;
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<BitWord> BitSubgroup::elements() const {
    std::vector<BitWord> out;
    out.reserve(size());
    for (uint64_t m = 0; m < size(); m++) {
        uint32_t v = 0;
        for (size_t i = 0; i < basis_.size(); i++) {
            if ((m >> i) & 1) {
                v ^= basis_[i].bits();
            }
        }
        out.emplace_back(p_, v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BitSubgroup> BitSubgroup::maximal_subgroups() const {
    std::vector<BitSubgroup> out;
    int r = rank();
    for (uint32_t f = 1; f < (uint32_t{1} << r); f++) {
        int j = std::countr_zero(f);
        std::vector<BitWord> gens;
        for (int i = 0; i < r; i++) {
            if (i == j) {
                continue;
            }
            gens.push_back(((f >> i) & 1) ? basis_[i] ^ basis_[j] : basis_[i]);
        }
        out.push_back(span(p_, gens));
    }
    std::sort(out.begin(), out.end());
    return out;
}

BitSubgroup BitSubgroup::orthogonal() const {
    uint32_t pivots = 0;
    for (const auto &b : basis_) {
        pivots |= std::bit_floor(b.bits());
    }
    std::vector<BitWord> gens;
    for (int col = 0; col < p_; col++) {
        uint32_t bit = uint32_t{1} << col;
        if (pivots & bit) {
            continue;
        }
        uint32_t x = bit;
        for (const auto &b : basis_) {
            if (b.bits() & bit) {
                x |= std::bit_floor(b.bits());
            }
        }
        gens.emplace_back(p_, x);
    }
    return span(p_, gens);
}

bool BitSubgroup::is_subgroup_of(const BitSubgroup &other) const {
    if (p_ != other.p_) {
        return false;
    }
    return std::all_of(basis_.begin(), basis_.end(),
                       [&](const BitWord &b) { return other.contains(b); });
}

std::vector<Coset> cosets(const BitSubgroup &h, const BitSubgroup &g) {
    if (!h.is_subgroup_of(g)) {
        throw ContractError("cosets: h is not a subgroup of g");
    }
    std::vector<Coset> out;
    std::unordered_set<uint32_t> seen;
    auto hs = h.elements();
    for (const auto &w : g.elements()) {
        if (!seen.insert(h.reduce(w).bits()).second) {
            continue;
        }
        Coset c{w, {}};
        for (const auto &x : hs) {
            c.elements.push_back(w ^ x);
        }
        std::sort(c.elements.begin(), c.elements.end());
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace qap
