#include "wiretap/block_code.hpp"

#include <stdexcept>

#include "wiretap/rng.hpp"

namespace wiretap {

CodeSpec CodeSpec::unitary(int k) {
    CodeSpec spec{Kind::Unitary, k, k, 0};
    spec.validate();
    return spec;
}

CodeSpec CodeSpec::bounded_distance(int n, int k, int t) {
    CodeSpec spec{Kind::BoundedDistance, n, k, t};
    spec.validate();
    return spec;
}

void CodeSpec::validate() const {
    if (k < 1 || n < k)
        throw std::invalid_argument("code: need n >= k >= 1");
    if (kind == Kind::Unitary && n != k)
        throw std::invalid_argument("code: unitary code requires n == k");
    if (t < 0 || t > n)
        throw std::invalid_argument("code: need 0 <= t <= n");
}

SystematicGenerator random_systematic_generator(int n, int k,
                                                std::uint64_t seed) {
    if (k < 1 || n < k)
        throw std::invalid_argument("generator: need n >= k >= 1");
    SystematicGenerator gen;
    gen.k = k;
    gen.c = gf2::BitMatrix(std::size_t(k), std::size_t(n - k));
    Rng rng(seed);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < n - k; ++c)
            if (rng.next_bit()) gen.c.set(std::size_t(r), std::size_t(c), true);
    return gen;
}

gf2::BitVector encode(const gf2::BitVector& u_scrambled,
                      const SystematicGenerator& gen) {
    if (u_scrambled.size() != std::size_t(gen.k))
        throw std::invalid_argument("encode: message length != k");
    const std::size_t n = std::size_t(gen.n());
    gf2::BitVector out(n);
    for (std::size_t i = 0; i < u_scrambled.size(); ++i)
        out.set(i, u_scrambled.get(i));
    if (gen.c.cols() > 0) {
        const auto parity = gf2::mat_vec_mul(u_scrambled, gen.c);
        for (std::size_t j = 0; j < parity.size(); ++j)
            out.set(std::size_t(gen.k) + j, parity.get(j));
    }
    return out;
}

BoundedDistanceResult bounded_distance_decode(const gf2::BitVector& received_hard,
                                              const gf2::BitVector& transmitted,
                                              int t) {
    if (received_hard.size() != transmitted.size())
        throw std::invalid_argument("bounded_distance_decode: length mismatch");
    const auto error = received_hard ^ transmitted;
    if (error.weight() <= std::size_t(t))
        return {transmitted, false};
    return {received_hard, true};
}

}  // namespace wiretap
