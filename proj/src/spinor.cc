#include "qap/spinor.h"

#include "qap/errors.h"

namespace qap {

Spinor::Spinor(BitWord zeta, BitWord alpha)
    : zeta_((uint16_t)zeta.bits()), alpha_((uint16_t)alpha.bits()), p_((uint8_t)zeta.p()) {
    if (zeta.p() != alpha.p()) {
        throw ContractError("spinor strings differ in length");
    }
}

Spinor Spinor::from_code(int p, uint32_t code) {
    uint32_t mask = (uint32_t{1} << p) - 1;
    return Spinor(BitWord(p, code & mask), BitWord(p, (code >> p) & mask));
}

Spinor Spinor::parse(std::string_view text) {
    if (text.size() < 5 || text.substr(0, 2) != "S[" || text.back() != ']') {
        throw ContractError("not a spinor: '" + std::string(text) + "'");
    }
    auto body = text.substr(2, text.size() - 3);
    auto bar = body.find('|');
    if (bar == std::string_view::npos) {
        throw ContractError("not a spinor: '" + std::string(text) + "'");
    }
    return Spinor(BitWord::from_string(body.substr(0, bar)), BitWord::from_string(body.substr(bar + 1)));
}

std::string Spinor::str() const {
    return "S[" + zeta().str() + "|" + alpha().str() + "]";
}

std::string Spinor::display() const {
    return self_parity(*this) ? "i·" + str() : str();
}

std::strong_ordering Spinor::operator<=>(const Spinor &o) const {
    if (auto c = p_ <=> o.p_; c != 0) {
        return c;
    }
    if (auto c = alpha_ <=> o.alpha_; c != 0) {
        return c;
    }
    return zeta_ <=> o.zeta_;
}

std::string PhasedSpinor::str() const {
    static const char *prefix[] = {"", "i·", "-", "-i·"};
    return prefix[phase] + body.str();
}

Spinor bi_add(const Spinor &a, const Spinor &b) {
    return Spinor(a.zeta() ^ b.zeta(), a.alpha() ^ b.alpha());
}

PhasedSpinor product(const PhasedSpinor &a, const PhasedSpinor &b) {
    int sign = dot(b.body.zeta(), a.body.alpha()) ? 2 : 0;
    return PhasedSpinor(a.phase + b.phase + sign, bi_add(a.body, b.body));
}

bool symplectic(const Spinor &a, const Spinor &b) {
    return dot(b.zeta(), a.alpha()) ^ dot(a.zeta(), b.alpha());
}

bool self_parity(const Spinor &s) {
    return dot(s.zeta(), s.alpha());
}

PhasedSpinor transpose(const Spinor &s) {
    return PhasedSpinor(self_parity(s) ? 2 : 0, s);
}

ExactMatrix to_matrix(const PhasedSpinor &s, bool hermitian) {
    int p = s.body.p();
    if (p > kMaxMatrixBits) {
        throw ResourceError("matrix expansion limited to p <= 6");
    }
    ExactMatrix m = ExactMatrix::identity(1);
    for (int r = 1; r <= p; r++) {
        bool a = s.body.alpha().get(r);
        bool e = s.body.zeta().get(r);
        ExactMatrix f(2);
        GaussInt lower = e ? GaussInt{-1, 0} : GaussInt{1, 0};
        // |0><a| + (-1)^e |1><1+a|
        f.at(0, a ? 1 : 0) = {1, 0};
        f.at(1, a ? 0 : 1) = lower;
        m = m.kron(f);
    }
    int ph = s.phase + (hermitian && self_parity(s.body) ? 1 : 0);
    return m.scaled(GaussInt::i_pow(ph));
}

}  // namespace qap
