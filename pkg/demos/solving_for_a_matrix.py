# From quantum parameters back to a matrix
#
# Every positive q-vector comes from exactly one totally positive Toeplitz
# matrix, but there is no formula for it. The solver finds it by Newton
# iteration in log coordinates.

import math
import random
from fractions import Fraction

import mpmath

from tptoeplitz import solver, symfun, toeplitz

# q = (2, 2) is the rank-2 exponential point, c = (1, 1/2).
print(solver.solve_q([2, 2]).c)

# q_k = k(7-k) gives back 1/k!.
u = solver.solve_q([k * (7 - k) for k in range(1, 7)])
print([mpmath.nstr(c * math.factorial(k), 15) for k, c in enumerate(u.c, start=1)])

# A random point: compute its q exactly, forget the matrix, solve.
rng = random.Random(0)
alpha = sorted({Fraction(rng.randint(1, 40), 40) for _ in range(5)}, reverse=True)[:3]
beta = sorted({Fraction(rng.randint(1, 40), 40) for _ in range(5)}, reverse=True)[:3]
exact = toeplitz.truncate(symfun.SchoenbergParams(tuple(alpha), tuple(beta)), 6)
report = solver.solve_q_report(toeplitz.q_map(exact), 1e-12)
print("iterations:", report.iterations, "residual:", mpmath.nstr(report.residual, 3))
for got, want in zip(report.matrix.c, exact.c):
    print(mpmath.nstr(got, 12), want)
