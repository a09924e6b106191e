# Limits along truncations u^[n+1]
#
# Take alpha_i = (1/2)(2/5)^(i-1) and beta_j = (1/3)(1/4)^(j-1). The finite
# data of the truncations recover the parameters as n grows: d_1 grows like
# alpha_1^n, the first summand of the superpotential tends to 1/alpha_1, and
# the quantum Schubert class of s1 s2 tends to 1/(alpha_1 alpha_2).
#
# The infinite sequences are cut at 32 terms; tails beyond that are below
# working precision for the ranks used here.

from fractions import Fraction as F

import mpmath

from tptoeplitz import asymptotics, symfun

mpmath.mp.prec = 256
p = symfun.SchoenbergParams.geometric(F(1, 2), F(2, 5), F(1, 3), F(1, 4), 32)

# delta_1/n against ln alpha_1 = -0.693...
for row in asymptotics.sweep_d(p, [10, 20, 40], [1], [1]):
    print(row["n"], row["quantity"], mpmath.nstr(row["value"], 8), mpmath.nstr(row["abs_err"], 4))

# F_1 converges geometrically fast.
rows = asymptotics.sweep_chern(p, [5, 10, 20, 40], [1])
for row in rows:
    if row["quantity"] in ("F_1", "F'_1"):
        print(row["n"], row["quantity"], mpmath.nstr(asymptotics.as_float(row["abs_err"]), 4))

# Quantum Schubert evaluation for w = 231, its dual, and q_1 -> 0.
for row in asymptotics.sweep_schubert(p, (2, 3, 1), [8, 16, 32]):
    print(row["n"], row["quantity"], mpmath.nstr(asymptotics.as_float(row["value"]), 10))

# The same tables as CSV, ready for plotting.
print(asymptotics.to_csv(asymptotics.sweep_chern(p, [10, 20], [1, 2]), float_mode=True))
