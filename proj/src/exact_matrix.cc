#include "qap/exact_matrix.h"

#include <sstream>

#include "qap/errors.h"

namespace qap {

GaussInt GaussInt::i_pow(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

ExactMatrix ExactMatrix::identity(size_t n) {
    ExactMatrix m(n);
    for (size_t k = 0; k < n; k++) {
        m.at(k, k) = {1, 0};
    }
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix &o) const {
    if (n_ != o.n_) {
        throw ContractError("matrix dimension mismatch");
    }
    ExactMatrix r(n_);
    for (size_t i = 0; i < n_; i++) {
        for (size_t k = 0; k < n_; k++) {
            GaussInt a = at(i, k);
            if (a.re == 0 && a.im == 0) {
                continue;
            }
            for (size_t j = 0; j < n_; j++) {
                r.at(i, j) = r.at(i, j) + a * o.at(k, j);
            }
        }
    }
    return r;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix &o) const {
    if (n_ != o.n_) {
        throw ContractError("matrix dimension mismatch");
    }
    ExactMatrix r(n_);
    for (size_t k = 0; k < v_.size(); k++) {
        r.v_[k] = v_[k] + o.v_[k];
    }
    return r;
}

ExactMatrix ExactMatrix::scaled(GaussInt k) const {
    ExactMatrix r = *this;
    for (auto &x : r.v_) {
        x = x * k;
    }
    return r;
}

ExactMatrix ExactMatrix::adjoint() const {
    ExactMatrix r(n_);
    for (size_t i = 0; i < n_; i++) {
        for (size_t j = 0; j < n_; j++) {
            r.at(j, i) = at(i, j).conj();
        }
    }
    return r;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix r(n_);
    for (size_t i = 0; i < n_; i++) {
        for (size_t j = 0; j < n_; j++) {
            r.at(j, i) = at(i, j);
        }
    }
    return r;
}

ExactMatrix ExactMatrix::kron(const ExactMatrix &o) const {
    ExactMatrix r(n_ * o.n_);
    for (size_t i = 0; i < n_; i++) {
        for (size_t j = 0; j < n_; j++) {
            GaussInt a = at(i, j);
            for (size_t k = 0; k < o.n_; k++) {
                for (size_t l = 0; l < o.n_; l++) {
                    r.at(i * o.n_ + k, j * o.n_ + l) = a * o.at(k, l);
                }
            }
        }
    }
    return r;
}

std::string ExactMatrix::str() const {
    std::ostringstream out;
    for (size_t i = 0; i < n_; i++) {
        for (size_t j = 0; j < n_; j++) {
            const auto &x = at(i, j);
            out << (j ? " " : "") << x.re << (x.im < 0 ? "-" : "+") << (x.im < 0 ? -x.im : x.im) << "i";
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace qap
