"""Finite fields, projective points and the incidence matrix M_{k,q}."""

import numpy as np

from projforce import build_incidence, enumerate_points, field_new, simplex_codewords

# F_4 = F_2[x]/(x^2 + x + 1); the element x is encoded as 2
f4 = field_new(4)
print(f4, "modulus coefficients (low to high):", f4.modulus)
print("x * x =", f4.mul(2, 2), "(encoded x + 1)")

# Canonical representatives of PG(1, 3): first nonzero coordinate is 1
f3 = field_new(3)
print("PG(1,3):", enumerate_points(f3, 2))

# Every projective codeword of the simplex code has weight q^(k-1)
words = simplex_codewords(f3, 2)
print("simplex code weights:", [sum(1 for a in w if a) for w in words])

# M for PG(2,2) and its exact inverse (q M^T - (q-1) J) / q^(k-1)
system = build_incidence(field_new(2), 3)
print(system.m)
inverse_num = system.inverse_numerators()
print("M @ numerators / denominator == I:",
      np.array_equal(system.m.astype(np.int64) @ inverse_num, system.denominator * np.eye(7, dtype=np.int64)))
