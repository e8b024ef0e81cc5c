#pragma once

#include <memory>
#include <string>

#include "niltrans/finite_group.hpp"

namespace niltrans {

// Named group families with documented canonical element orderings:
//   cyclic(n)        index i = g^i, identity 0
//   dihedral(n)      index f*n+i = r^i s^f (rotations first), n >= 1
//   symmetric(n<=6)  permutation closure of (1 2), (1 2 ... n)
//   alternating(n<=6) closure of consecutive 3-cycles (i i+1 i+2)
//   quaternion8      1,-1,i,-i,j,-j,k,-k
//   heisenberg(p<=7) unitriangular 3x3 over Z_p; (a,b,c) -> (a*p+b)*p+c
//   direct_product(A,B)  index gA*|B| + gB, componentwise product
//   semidirect(p,q)  C_q : C_p with q = 1 mod p, x^a y^b -> a*q+b, where
//                    x^{-1} y x = y^t and t is the least element of
//                    multiplicative order p mod q

FiniteGroup cyclic_group(int n, std::size_t order_cap = kDefaultOrderCap);
FiniteGroup dihedral_group(int n, std::size_t order_cap = kDefaultOrderCap);
FiniteGroup symmetric_group(int n, std::size_t order_cap = kDefaultOrderCap);
FiniteGroup alternating_group(int n, std::size_t order_cap = kDefaultOrderCap);
FiniteGroup quaternion8();
FiniteGroup heisenberg_mod_p(int p, std::size_t order_cap = kDefaultOrderCap);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                           std::size_t order_cap = kDefaultOrderCap);
FiniteGroup semidirect_zp_on_zq(int p, int q, std::size_t order_cap = kDefaultOrderCap);

// Parses a family spec like "cyclic(6)", "dihedral(5)", "quaternion8",
// "heisenberg(3)", "semidirect(3,7)", "direct_product(symmetric(3),cyclic(2))".
// Long spec names (heisenberg_mod_p, semidirect_z_p_on_z_q) are accepted too.
FiniteGroup build_family(const std::string& spec, std::size_t order_cap = kDefaultOrderCap);

}  // namespace niltrans
