#include "einq/products.hpp"

#include "einq/errors.hpp"

namespace einq {

ProductQuadruple product_quadruple(const AlgebraDescriptor& base, int n1, int n2, int n3) {
    if (n1 < 2 || n2 < 2 || n3 < 2)
        throw parameter_error("product quadruple requires n1, n2, n3 >= 2");
    const long d = dimension(base);
    ChainDims dims{static_cast<long>(n1) * n2 * n3 * d, static_cast<long>(n1) * n2 * d,
                   static_cast<long>(n1) * d, d};
    CasimirConstants cc;
    cc.l_p = rat(1, n3);
    cc.k_p = cc.k_u = rat(1, static_cast<long>(n2) * n3);
    cc.h_p = cc.h_u = cc.h_n = rat(1, static_cast<long>(n1) * n2 * n3);
    QuadrupleFlags flags;
    flags.h_trivial = false;
    flags.g_simple = false;
    flags.k_ideal_in_l = false;
    Quadruple q = Quadruple::make(dims, rat(1, n3), rat(1, static_cast<long>(n2) * n3),
                                  cc, flags,
                                  "product(" + base.name() + "," + std::to_string(n1) + "," +
                                      std::to_string(n2) + "," + std::to_string(n3) + ")");
    return {base, n1, n2, n3, std::move(q)};
}

Quadruple pair_quadruple(const AlgebraDescriptor& base, int p, int q) {
    if (p < 2 || q < 2) throw parameter_error("pair quadruple requires p, q >= 2");
    const long d = dimension(base);
    ChainDims dims{static_cast<long>(p) * q * d, static_cast<long>(p) * d, d, 0};
    CasimirConstants cc;
    cc.l_p = rat(1, q);
    cc.k_p = cc.k_u = rat(1, static_cast<long>(p) * q);
    cc.h_p = cc.h_u = cc.h_n = rat(0);
    QuadrupleFlags flags;
    flags.h_trivial = true;
    flags.g_simple = false;
    flags.k_ideal_in_l = false;
    return Quadruple::make(dims, rat(1, q), rat(1, static_cast<long>(p) * q), cc, flags,
                           "pair(" + base.name() + "," + std::to_string(p) + "," +
                               std::to_string(q) + ")");
}

long count_nonnaturally_reductive(std::int64_t n) {
    if (n < 2) throw parameter_error("count requires n >= 2");
    long divisor_count = 1;
    std::int64_t rest = n;
    for (std::int64_t p = 2; p * p <= rest; ++p) {
        if (rest % p == 0) {
            int e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            divisor_count *= e + 1;
        }
    }
    if (rest > 1) divisor_count *= 2;
    return divisor_count - 2;
}

}  // namespace einq
