#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qap {

/// Gaussian integer a + b i.
struct GaussInt {
    int64_t re = 0;
    int64_t im = 0;

    static GaussInt i_pow(int k);

    GaussInt operator+(GaussInt o) const { return {re + o.re, im + o.im}; }
    GaussInt operator-(GaussInt o) const { return {re - o.re, im - o.im}; }
    GaussInt operator*(GaussInt o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
    GaussInt conj() const { return {re, -im}; }
    bool operator==(const GaussInt &) const = default;
};

/// Dense square matrix over Z[i].
class ExactMatrix {
   public:
    ExactMatrix() = default;
    explicit ExactMatrix(size_t n) : n_(n), v_(n * n) {}

    static ExactMatrix identity(size_t n);

    size_t dim() const { return n_; }
    GaussInt &at(size_t r, size_t c) { return v_[r * n_ + c]; }
    const GaussInt &at(size_t r, size_t c) const { return v_[r * n_ + c]; }

    ExactMatrix operator*(const ExactMatrix &o) const;
    ExactMatrix operator+(const ExactMatrix &o) const;
    ExactMatrix scaled(GaussInt k) const;
    ExactMatrix adjoint() const;
    ExactMatrix transpose() const;
    ExactMatrix kron(const ExactMatrix &o) const;
    bool operator==(const ExactMatrix &) const = default;

    std::string str() const;

   private:
    size_t n_ = 0;
    std::vector<GaussInt> v_;
};

}  // namespace qap
