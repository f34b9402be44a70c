#ifndef SUBL_HALTON_HPP
#define SUBL_HALTON_HPP

#include <array>
#include <cstdint>

namespace subl {

/// Van der Corput radical inverse in the given base.
inline double radical_inverse(std::uint64_t i, unsigned base) {
    double inv = 1.0 / base, f = inv, x = 0.0;
    while (i) {
        x += static_cast<double>(i % base) * f;
        i /= base;
        f *= inv;
    }
    return x;
}

/// Halton low-discrepancy sequence in up to 3 dimensions (bases 2, 3, 5).
/// A seed offsets the index, which is enough to decorrelate runs while
/// keeping the sequence fully deterministic.
class Halton {
public:
    explicit Halton(int dim, std::uint64_t seed = 0)
        : dim_(dim), index_(seed * 7919 + 1) {}

    std::array<double, 3> next() {
        static const unsigned bases[3] = {2, 3, 5};
        std::array<double, 3> p{0.0, 0.0, 0.0};
        for (int d = 0; d < dim_; ++d) p[d] = radical_inverse(index_, bases[d]);
        ++index_;
        return p;
    }

private:
    int dim_;
    std::uint64_t index_;
};

} // namespace subl

#endif
