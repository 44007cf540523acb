#pragma once
// Scrambling matrices for non-systematic transmission. A scrambler is a
// pair (S, S^-1) of k x k binary matrices; the message is multiplied by S
// before encoding and the receiver multiplies the decoded message part by
// S^-1. The weight/density constraint is imposed on S^-1, whose columns
// govern how residual decode errors spread over the message.

#include <cstdint>
#include <iosfwd>
#include <string>

#include "wiretap/gf2.hpp"

namespace wiretap {

enum class ScramblerKind { Identity, Regular, Dense, PerfectModel };

std::string_view scrambler_kind_name(ScramblerKind kind);

struct ScramblerSpec {
    ScramblerKind kind = ScramblerKind::Identity;
    std::size_t k = 0;
    std::size_t w = 0;     // Regular: column weight of S^-1
    double rho = 0.5;      // Dense: entry density of S^-1
    std::uint64_t seed = 0;

    static ScramblerSpec identity(std::size_t k);
    static ScramblerSpec regular(std::size_t k, std::size_t w, std::uint64_t seed);
    static ScramblerSpec dense(std::size_t k, double rho, std::uint64_t seed);
    // Analysis-only marker; generate() rejects it.
    static ScramblerSpec perfect_model(std::size_t k);

    void validate() const;  // throws std::invalid_argument
};

struct ScramblerPair {
    gf2::BitMatrix s;
    gf2::BitMatrix s_inv;
    std::size_t k() const { return s.rows(); }
};

// Deterministic per spec.seed; samples S^-1 candidates until one is
// invertible (budget 100 attempts) and sets S to its inverse. Throws
// std::runtime_error naming the attempts made when the budget runs out.
ScramblerPair generate(const ScramblerSpec& spec);

gf2::BitVector scramble(const gf2::BitVector& u, const ScramblerPair& pair);
gf2::BitVector descramble(const gf2::BitVector& c_l, const ScramblerPair& pair);

// Persistence: a header line describing the spec, then S and S^-1 in the
// gf2 textual matrix format.
void write_scrambler(std::ostream& os, const ScramblerSpec& spec,
                     const ScramblerPair& pair);
struct StoredScrambler {
    ScramblerSpec spec;
    ScramblerPair pair;
};
StoredScrambler read_scrambler(std::istream& is);

}  // namespace wiretap
