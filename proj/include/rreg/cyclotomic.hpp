#pragma once

#include "rreg/arith.hpp"

namespace rreg {

/// Phi_i(q) through q^i - 1 = prod_{j | i} Phi_j(q). Memoized per (i, q);
/// safe to call from several threads.
Integer cyclotomic_eval(unsigned i, const Integer& q);

/// r-part of Phi_i(q) from the order of q modulo r alone:
///   r odd, e = ord_r(q):  (q^e - 1)_r if i = e;  r if i = e r^f, f >= 1;  1 otherwise.
///   r = 2:                (q - 1)_2 if i = 1;  (q + 1)_2 if i = 2;  2 if i = 2^f, f >= 2;  1 otherwise.
/// Throws DomainError when r | q.
Integer phi_r_part(unsigned i, const Integer& q, Prime r);

/// Same quantity by brute force: evaluate Phi_i(q) and strip factors of r.
Integer phi_r_part_oracle(unsigned i, const Integer& q, Prime r);

} // namespace rreg
