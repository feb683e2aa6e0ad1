#ifndef EINQ_PRODUCTS_HPP
#define EINQ_PRODUCTS_HPP

#include <cstdint>

#include "einq/algebra.hpp"
#include "einq/quadruple.hpp"

namespace einq {

// Quadruple over the n1*n2*n3-fold product of a compact simple group, with the
// three nested diagonal subproducts as the chain.
struct ProductQuadruple {
    AlgebraDescriptor base;
    int n1, n2, n3;
    Quadruple quadruple;
};

// G = (n1 n2 n3) H > L = (n1 n2) H > K = n1 H > H diagonal; n_i >= 2.
ProductQuadruple product_quadruple(const AlgebraDescriptor& base, int n1, int n2, int n3);

// G = (p q) H > L = p H > K = H diagonal > {e}; p, q >= 2. One such quadruple
// per ordered factorization; distinct q give distinct (c1, c2).
Quadruple pair_quadruple(const AlgebraDescriptor& base, int p, int q);

// Number of proper factorizations n = p q with p, q >= 2 counted by the
// divisor q: prod (l_i + 1) - 2 over the prime factorization n = prod p_i^l_i.
// This is the guaranteed lower bound on pairwise non-equivalent metrics.
long count_nonnaturally_reductive(std::int64_t n);

}  // namespace einq

#endif
