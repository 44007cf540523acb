#pragma once
// BPSK over AWGN. Bit 0 maps to +1.0 and bit 1 to -1.0 (fixed so that
// serialized test vectors are stable); symbols have unit energy and the
// noise variance accounts for the code-rate bandwidth expansion:
// sigma^2 = 1 / (2 * R * 10^(EbN0_dB / 10)).

#include <span>
#include <vector>

#include "wiretap/gf2.hpp"
#include "wiretap/rng.hpp"

namespace wiretap {

struct ChannelParams {
    double ebn0_db = 0.0;
    double rate = 1.0;  // information bits per transmitted bit
    double sigma = 0.0;

    static ChannelParams from_ebn0_db(double ebn0_db, double rate);
};

std::vector<double> modulate(const gf2::BitVector& c);

void add_noise(std::span<double> x, const ChannelParams& params, Rng& rng);

// y >= 0 decides bit 0; an exact 0.0 maps to 0.
gf2::BitVector hard_decision(std::span<const double> y);

// Per-symbol LLR log P(bit=0|y)/P(bit=1|y) = 2y/sigma^2.
std::vector<double> bpsk_llrs(std::span<const double> y,
                              const ChannelParams& params);

}  // namespace wiretap
