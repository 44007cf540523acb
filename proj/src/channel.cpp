#include "wiretap/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace wiretap {

ChannelParams ChannelParams::from_ebn0_db(double ebn0_db, double rate) {
    if (!(rate > 0.0 && rate <= 1.0))
        throw std::invalid_argument("channel: rate must be in (0, 1]");
    ChannelParams p;
    p.ebn0_db = ebn0_db;
    p.rate = rate;
    p.sigma = std::sqrt(1.0 / (2.0 * rate * std::pow(10.0, ebn0_db / 10.0)));
    return p;
}

std::vector<double> modulate(const gf2::BitVector& c) {
    std::vector<double> x(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) x[i] = c.get(i) ? -1.0 : 1.0;
    return x;
}

void add_noise(std::span<double> x, const ChannelParams& params, Rng& rng) {
    if (!(params.sigma > 0.0))
        throw std::invalid_argument("channel: sigma must be positive");
    for (double& v : x) v += params.sigma * rng.next_gaussian();
}

gf2::BitVector hard_decision(std::span<const double> y) {
    gf2::BitVector bits(y.size());
    for (std::size_t i = 0; i < y.size(); ++i)
        if (y[i] < 0.0) bits.set(i, true);
    return bits;
}

std::vector<double> bpsk_llrs(std::span<const double> y,
                              const ChannelParams& params) {
    const double scale = 2.0 / (params.sigma * params.sigma);
    std::vector<double> llr(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) llr[i] = scale * y[i];
    return llr;
}

}  // namespace wiretap
