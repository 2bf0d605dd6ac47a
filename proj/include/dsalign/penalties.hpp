#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dsalign {

/// Alignment scores: `a` for a match, `x` for a mismatch, and affine gaps
/// where a run of k gaps costs o + k*e. The wavefront formulation needs
/// matches to be free, so a must be 0.
struct Penalties {
    int a = 0;
    int x = 1;
    int o = 2;
    int e = 1;

    void validate() const {
        if (a != 0) throw std::invalid_argument("match score a must be 0 (got " + std::to_string(a) + ")");
        if (x < 1) throw std::invalid_argument("mismatch score x must be >= 1");
        if (e < 1) throw std::invalid_argument("gap-extend score e must be >= 1");
        if (o < 0) throw std::invalid_argument("gap-open score o must be >= 0");
    }

    /// Cost of a gap run of length k.
    long gap(long k) const { return k > 0 ? o + k * static_cast<long>(e) : 0; }
};

}  // namespace dsalign
