#include "wiretap/scrambler.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "wiretap/rng.hpp"

namespace wiretap {

namespace {

constexpr int kRetryBudget = 100;

// Uniform weight-w column: partial Fisher-Yates over row indices.
void sample_column(gf2::BitMatrix& m, std::size_t col, std::size_t w,
                   std::vector<std::size_t>& scratch, Rng& rng) {
    const std::size_t k = m.rows();
    scratch.resize(k);
    for (std::size_t i = 0; i < k; ++i) scratch[i] = i;
    for (std::size_t i = 0; i < w; ++i) {
        const std::size_t j = i + std::size_t(rng.next_u64() % (k - i));
        std::swap(scratch[i], scratch[j]);
        m.set(scratch[i], col, true);
    }
}

}  // namespace

std::string_view scrambler_kind_name(ScramblerKind kind) {
    switch (kind) {
        case ScramblerKind::Identity: return "identity";
        case ScramblerKind::Regular: return "regular";
        case ScramblerKind::Dense: return "dense";
        case ScramblerKind::PerfectModel: return "perfect";
    }
    return "?";
}

ScramblerSpec ScramblerSpec::identity(std::size_t k) {
    return {ScramblerKind::Identity, k, 0, 0.0, 0};
}
ScramblerSpec ScramblerSpec::regular(std::size_t k, std::size_t w,
                                     std::uint64_t seed) {
    return {ScramblerKind::Regular, k, w, 0.0, seed};
}
ScramblerSpec ScramblerSpec::dense(std::size_t k, double rho,
                                   std::uint64_t seed) {
    return {ScramblerKind::Dense, k, 0, rho, seed};
}
ScramblerSpec ScramblerSpec::perfect_model(std::size_t k) {
    return {ScramblerKind::PerfectModel, k, 0, 0.0, 0};
}

void ScramblerSpec::validate() const {
    if (k == 0) throw std::invalid_argument("scrambler: k must be positive");
    if (kind == ScramblerKind::Regular && (w < 1 || w > k))
        throw std::invalid_argument("scrambler: regular weight must satisfy 1 <= w <= k");
    if (kind == ScramblerKind::Dense && !(rho > 0.0 && rho <= 1.0))
        throw std::invalid_argument("scrambler: dense density must satisfy 0 < rho <= 1");
}

ScramblerPair generate(const ScramblerSpec& spec) {
    spec.validate();
    if (spec.kind == ScramblerKind::PerfectModel)
        throw std::invalid_argument(
            "scrambler: perfect-model is analysis-only and has no matrix");

    const std::size_t k = spec.k;
    if (spec.kind == ScramblerKind::Identity) {
        auto id = gf2::BitMatrix::identity(k);
        return {id, id};
    }

    Rng rng(spec.seed);
    std::vector<std::size_t> scratch;
    for (int attempt = 1; attempt <= kRetryBudget; ++attempt) {
        gf2::BitMatrix s_inv(k, k);
        if (spec.kind == ScramblerKind::Regular) {
            for (std::size_t col = 0; col < k; ++col)
                sample_column(s_inv, col, spec.w, scratch, rng);
        } else {
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = 0; c < k; ++c)
                    if (rng.next_unit() <= spec.rho) s_inv.set(r, c, true);
        }
        if (auto s = gf2::invert(s_inv))
            return {std::move(*s), std::move(s_inv)};
    }
    std::ostringstream msg;
    msg << "scrambler: no invertible " << scrambler_kind_name(spec.kind)
        << " candidate after " << kRetryBudget << " attempts (k=" << k << ")";
    throw std::runtime_error(msg.str());
}

gf2::BitVector scramble(const gf2::BitVector& u, const ScramblerPair& pair) {
    return gf2::mat_vec_mul(u, pair.s);
}

gf2::BitVector descramble(const gf2::BitVector& c_l, const ScramblerPair& pair) {
    return gf2::mat_vec_mul(c_l, pair.s_inv);
}

void write_scrambler(std::ostream& os, const ScramblerSpec& spec,
                     const ScramblerPair& pair) {
    os << "scrambler kind=" << scrambler_kind_name(spec.kind) << " k=" << spec.k
       << " w=" << spec.w << " rho=" << spec.rho << " seed=" << spec.seed
       << '\n';
    gf2::write_matrix(os, pair.s);
    gf2::write_matrix(os, pair.s_inv);
}

StoredScrambler read_scrambler(std::istream& is) {
    std::string header;
    if (!std::getline(is, header) || header.rfind("scrambler ", 0) != 0)
        throw std::runtime_error("scrambler read: missing header line");

    ScramblerSpec spec;
    std::istringstream hs(header.substr(10));
    std::string field;
    while (hs >> field) {
        const auto eq = field.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("scrambler read: malformed header field '" +
                                     field + "'");
        const std::string key = field.substr(0, eq);
        const std::string value = field.substr(eq + 1);
        if (key == "kind") {
            if (value == "identity") spec.kind = ScramblerKind::Identity;
            else if (value == "regular") spec.kind = ScramblerKind::Regular;
            else if (value == "dense") spec.kind = ScramblerKind::Dense;
            else if (value == "perfect") spec.kind = ScramblerKind::PerfectModel;
            else throw std::runtime_error("scrambler read: unknown kind '" + value + "'");
        } else if (key == "k") {
            spec.k = std::stoull(value);
        } else if (key == "w") {
            spec.w = std::stoull(value);
        } else if (key == "rho") {
            spec.rho = std::stod(value);
        } else if (key == "seed") {
            spec.seed = std::stoull(value);
        } else {
            throw std::runtime_error("scrambler read: unknown header key '" + key + "'");
        }
    }

    ScramblerPair pair;
    pair.s = gf2::read_matrix(is);
    pair.s_inv = gf2::read_matrix(is);
    if (pair.s.rows() != spec.k || pair.s_inv.rows() != spec.k)
        throw std::runtime_error("scrambler read: matrix size does not match header");
    return {spec, pair};
}

}  // namespace wiretap
