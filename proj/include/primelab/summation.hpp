#pragma once

#include <cmath>
#include <complex>

namespace primelab {

// Neumaier variant of Kahan summation: the compensation also tracks the case
// where the incoming term is larger than the running sum.
class NeumaierSum {
public:
    NeumaierSum() = default;
    explicit NeumaierSum(double init) : sum_(init) {}

    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    // Merge another accumulator; order of merges must be fixed for
    // reproducible results.
    void merge(const NeumaierSum& other) {
        add(other.sum_);
        comp_ += other.comp_;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class ComplexNeumaierSum {
public:
    void add(std::complex<double> z) {
        re_.add(z.real());
        im_.add(z.imag());
    }

    std::complex<double> value() const { return {re_.value(), im_.value()}; }

private:
    NeumaierSum re_, im_;
};

}  // namespace primelab
