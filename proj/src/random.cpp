#include "idealcalc/random.hpp"

#include <Eigen/QR>
#include <cmath>
#include <stdexcept>

namespace idealcalc {

std::uint64_t mix_seed(std::uint64_t base, std::string_view tag) {
    std::uint64_t h = 1469598103934665603ULL ^ base;
    for (unsigned char c : tag) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return h;
}

Matrix random_matrix(Ensemble ensemble, int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("random_matrix: size must be >= 1");
    Matrix out = Matrix::Zero(n, n);
    switch (ensemble) {
        case Ensemble::gaussian:
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) out(i, j) = rng.cnormal();
            break;
        case Ensemble::unitary: {
            Matrix g(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) g(i, j) = rng.cnormal();
            Eigen::HouseholderQR<Matrix> qr(g);
            Matrix q = qr.householderQ();
            const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
            // Fix the phase gauge so the draw is Haar distributed.
            for (int j = 0; j < n; ++j) {
                const Complex d = r(j, j);
                const double mag = std::abs(d);
                q.col(j) *= mag > 0.0 ? d / mag : Complex(1.0, 0.0);
            }
            out = q;
            break;
        }
        case Ensemble::diagonal:
            for (int i = 0; i < n; ++i) out(i, i) = rng.normal();
            break;
    }
    return out;
}

Sequence random_sequence(int len, Rng& rng) {
    Sequence xi(static_cast<std::size_t>(len));
    for (auto& v : xi) v = rng.uniform(-1.0, 1.0);
    return xi;
}

Sequence random_decreasing(int len, Rng& rng) {
    Sequence xi(static_cast<std::size_t>(len));
    double level = 1.0;
    for (auto& v : xi) {
        v = level;
        level *= rng.uniform();
    }
    return xi;
}

}  // namespace idealcalc
