#include "ttensor/generators.hpp"

#include <array>

#include "ttensor/algebra.hpp"

namespace ttensor {

Tensor3 gen_random(std::size_t n1, std::size_t n2, std::size_t n3, RngStream& rng) {
    Tensor3 out(n1, n2, n3);
    for (double& v : out.entries()) v = rng.uniform(-1.0, 1.0);
    return out;
}

Tensor3 gen_random(const Shape& dims, RngStream& rng) {
    return gen_random(dims.n1, dims.n2, dims.n3, rng);
}

Tensor3 gen_symmetric(std::size_t n, std::size_t n3, RngStream& rng) {
    return symmetrize(gen_random(n, n, n3, rng));
}

Tensor3 gen_t_psd(std::size_t n, std::size_t n3, RngStream& rng, double delta) {
    if (delta < 0.0) throw std::invalid_argument("gen_t_psd: delta must be nonnegative");
    const Tensor3 r = gen_random(n, n, n3, rng);
    Tensor3 out = symmetrize(t_product(transpose(r), r));
    for (std::size_t i = 0; i < n; ++i) out(i, i, 0) += delta;
    return out;
}

std::pair<Tensor3, Tensor3> gen_loewner_pair(std::size_t n, std::size_t n3, RngStream& rng) {
    Tensor3 b = gen_t_psd(n, n3, rng);
    const Tensor3 p = gen_t_psd(n, n3, rng);
    Tensor3 a = b + p;
    return {std::move(a), std::move(b)};
}

std::pair<Tensor3, Tensor3> gen_commuting_psd_pair(std::size_t n, std::size_t n3, RngStream& rng) {
    const Tensor3 c = gen_t_psd(n, n3, rng);
    std::array<Tensor3, 4> powers{identity(n, n3), c, Tensor3{}, Tensor3{}};
    powers[2] = symmetrize(t_product(c, c));
    powers[3] = symmetrize(t_product(powers[2], c));

    auto polynomial = [&] {
        const std::size_t degree = 1 + rng.index(3);
        Tensor3 out(n, n, n3);
        for (std::size_t k = 0; k <= degree; ++k) out += rng.uniform(0.0, 1.0) * powers[k];
        return out;
    };
    Tensor3 a = polynomial();
    Tensor3 b = polynomial();
    return {std::move(a), std::move(b)};
}

Tensor3 gen_f_diagonal(std::size_t n, std::size_t n3, RngStream& rng) {
    Tensor3 out(n, n, n3);
    for (std::size_t k = 0; k < n3; ++k)
        for (std::size_t i = 0; i < n; ++i) out(i, i, k) = rng.uniform(-1.0, 1.0);
    return out;
}

}  // namespace ttensor
