#pragma once

// Independent oracles for the test suites. Nothing here calls the algebra
// under test except for constructing inputs.

#include <complex>
#include <optional>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qap/spinor.h"
#include "qap/subalgebra.h"

namespace qap::testing {

using Cx = std::complex<long long>;

/// Dense complex-integer matrix.
struct Mat {
    size_t n = 0;
    std::vector<Cx> v;
    explicit Mat(size_t n_ = 0) : n(n_), v(n_ * n_) {}
    Cx &at(size_t r, size_t c) { return v[r * n + c]; }
    Cx at(size_t r, size_t c) const { return v[r * n + c]; }
    bool operator==(const Mat &o) const { return n == o.n && v == o.v; }
};

inline Mat mul(const Mat &a, const Mat &b) {
    Mat r(a.n);
    for (size_t i = 0; i < a.n; i++)
        for (size_t k = 0; k < a.n; k++) {
            Cx x = a.at(i, k);
            if (x == Cx(0, 0)) continue;
            for (size_t j = 0; j < a.n; j++) r.at(i, j) += x * b.at(k, j);
        }
    return r;
}

inline Mat add(const Mat &a, const Mat &b) {
    Mat r(a.n);
    for (size_t k = 0; k < a.v.size(); k++) r.v[k] = a.v[k] + b.v[k];
    return r;
}

inline Mat scale(const Mat &a, Cx s) {
    Mat r = a;
    for (auto &x : r.v) x *= s;
    return r;
}

inline Mat dagger(const Mat &a) {
    Mat r(a.n);
    for (size_t i = 0; i < a.n; i++)
        for (size_t j = 0; j < a.n; j++) r.at(j, i) = std::conj(a.at(i, j));
    return r;
}

inline Cx ipow(int k) {
    static const Cx t[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return t[((k % 4) + 4) % 4];
}

/// Kronecker product of |0><a_i| + (-1)^{z_i}|1><1+a_i|, built factor by factor.
inline Mat spinor_matrix(int p, uint32_t zeta, uint32_t alpha) {
    Mat m(1);
    m.at(0, 0) = 1;
    for (int q = p - 1; q >= 0; q--) {  // leftmost factor first
        int a = (alpha >> q) & 1, z = (zeta >> q) & 1;
        Mat f(2);
        f.at(0, a) = 1;
        f.at(1, 1 - a) = z ? -1 : 1;
        Mat r(m.n * 2);
        for (size_t i = 0; i < m.n; i++)
            for (size_t j = 0; j < m.n; j++)
                for (size_t k = 0; k < 2; k++)
                    for (size_t l = 0; l < 2; l++) r.at(i * 2 + k, j * 2 + l) = m.at(i, j) * f.at(k, l);
        m = r;
    }
    return m;
}

inline Mat spinor_matrix(const PhasedSpinor &s) {
    return scale(spinor_matrix(s.body.p(), s.body.zeta_bits(), s.body.alpha_bits()), ipow(s.phase));
}

inline bool is_zero(const Mat &m) {
    for (auto x : m.v)
        if (x != Cx(0, 0)) return false;
    return true;
}

/// sqrt(2) h^zeta_alpha straight from its definition.
inline Mat rotation_matrix(int p, uint32_t zeta, uint32_t alpha, bool adjoint = false) {
    int par = __builtin_popcount(zeta & alpha) & 1;
    Cx c = Cx(0, 1) * ipow(3 * par);
    if (adjoint) c = -c;
    Mat s = scale(spinor_matrix(p, zeta, alpha), c);
    Mat id(s.n);
    for (size_t k = 0; k < s.n; k++) id.at(k, k) = 1;
    return add(id, s);
}

inline std::vector<Spinor> all_spinors(int p) {
    std::vector<Spinor> out;
    for (uint32_t a = 0; a < (1u << p); a++)
        for (uint32_t z = 0; z < (1u << p); z++) out.emplace_back(BitWord(p, z), BitWord(p, a));
    return out;
}

inline bool omega(const Spinor &s, const Spinor &t) {
    return (__builtin_popcount(s.zeta_bits() & t.alpha_bits()) + __builtin_popcount(t.zeta_bits() & s.alpha_bits())) & 1;
}

inline Spinor xor_spinor(const Spinor &s, const Spinor &t) {
    return Spinor(BitWord(s.p(), s.zeta_bits() ^ t.zeta_bits()), BitWord(s.p(), s.alpha_bits() ^ t.alpha_bits()));
}

inline Spinor sp(const std::string &z, const std::string &a) {
    return Spinor(BitWord::from_string(z), BitWord::from_string(a));
}

/// Parses "zeta_alpha" tokens separated by spaces.
inline SpinorSet set_of(int p, const std::string &tokens) {
    std::vector<Spinor> out;
    size_t at = 0;
    while (at < tokens.size()) {
        while (at < tokens.size() && tokens[at] == ' ') at++;
        if (at >= tokens.size()) break;
        size_t us = tokens.find('_', at);
        size_t end = tokens.find(' ', us);
        if (end == std::string::npos) end = tokens.size();
        out.push_back(sp(tokens.substr(at, us - at), tokens.substr(us + 1, end - us - 1)));
        at = end;
    }
    return SpinorSet(p, out);
}

/// Brute-force: all Cartan subalgebras by exhaustive search over maximal
/// commuting subsets closed under xor (feasible for p <= 2).
inline std::set<SpinorSet> brute_force_cartans(int p) {
    auto all = all_spinors(p);
    std::vector<Spinor> nonid(all.begin() + 1, all.end());
    std::set<SpinorSet> out;
    size_t n = nonid.size();
    size_t want = (size_t{1} << p) - 1;
    // Enumerate subsets of size 2^p - 1 via a bitmask over <= 15 spinors.
    for (uint32_t m = 0; m < (1u << n); m++) {
        if ((size_t)__builtin_popcount(m) != want) continue;
        std::vector<Spinor> s{all[0]};
        for (size_t k = 0; k < n; k++)
            if ((m >> k) & 1) s.push_back(nonid[k]);
        bool good = true;
        std::set<uint32_t> codes;
        for (auto &x : s) codes.insert(x.code());
        for (size_t i = 0; i < s.size() && good; i++)
            for (size_t j = 0; j < s.size() && good; j++) {
                if (omega(s[i], s[j])) good = false;
                if (!codes.count(xor_spinor(s[i], s[j]).code())) good = false;
            }
        if (good) out.insert(SpinorSet(p, s));
    }
    return out;
}

/// Smallest x in lex order with every (w . x = b), by exhaustive search.
inline std::optional<uint32_t> brute_solve(int p, const std::vector<std::pair<uint32_t, bool>> &rows) {
    for (uint32_t x = 0; x < (1u << p); x++) {
        bool ok = true;
        for (auto [w, b] : rows)
            if (((__builtin_popcount(w & x) & 1) != 0) != b) ok = false;
        if (ok) return x;
    }
    return std::nullopt;
}

}  // namespace qap::testing
