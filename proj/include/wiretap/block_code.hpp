#pragma once
// Systematic linear block codes: the unitary-rate code (G = I) and an
// ideal t-error-correcting bounded-distance model. The bounded-distance
// decoder is genie-aided: it corrects any pattern of at most t channel
// errors and passes heavier patterns through unchanged, with no
// miscorrection. No algebraic decoding is involved.

#include <cstdint>

#include "wiretap/gf2.hpp"

namespace wiretap {

struct CodeSpec {
    enum class Kind { Unitary, BoundedDistance };
    Kind kind = Kind::Unitary;
    int n = 0;
    int k = 0;
    int t = 0;

    static CodeSpec unitary(int k);
    static CodeSpec bounded_distance(int n, int k, int t);

    double rate() const { return double(k) / double(n); }
    void validate() const;  // throws std::invalid_argument
};

// G = [I | C]; only the parity block C is stored. n = k + C.cols().
struct SystematicGenerator {
    gf2::BitMatrix c;
    int k = 0;
    int n() const { return k + int(c.cols()); }
};

// Uniformly random parity block; used when an actual codeword stream is
// needed for the bounded-distance model.
SystematicGenerator random_systematic_generator(int n, int k, std::uint64_t seed);

// [input | input*C]; the first k output bits equal the input.
gf2::BitVector encode(const gf2::BitVector& u_scrambled,
                      const SystematicGenerator& gen);

struct BoundedDistanceResult {
    gf2::BitVector decoded;
    bool frame_error = false;
};

BoundedDistanceResult bounded_distance_decode(const gf2::BitVector& received_hard,
                                              const gf2::BitVector& transmitted,
                                              int t);

}  // namespace wiretap
