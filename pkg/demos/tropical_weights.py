# Min-ideal fillings and their weights
#
# A min-ideal filling of the staircase is determined by its diagonal, and the
# weight map is a bijection onto zero-sum vectors.

from fractions import Fraction as F

from tptoeplitz import tropical

f = tropical.from_diagonal([3, 1, 2])
print(f.to_json())
print(tropical.weight(f))

# The all-ones filling has weight 2 rho.
print(tropical.weight(tropical.from_diagonal([1] * 4)), tropical.rho2(4))

# Inverting the weight.
g = tropical.weight_inverse([F(5, 2), -1, F(1, 2), -2])
print(g.diagonal, tropical.weight(g))

# The tropical Edrei map: M_ij = min(A_i, B_j), and back.
tp = tropical.TropParams((0, 2, 5), (1, 5))
window = tropical.trop_E(tp, 5, 5)
print(tropical.trop_E_inverse(window, 5, 5))

# Normalized weights of large truncations approach A and B. The error is at
# most 2(s+i-2)V/n, where s is the index from which A and B are constant and
# V the largest absolute value; the constant case attains it.
for n in (10, 100, 1000):
    out = tropical.trop_asymptotics(tp, n, [1, 2, 3], [1, 2])
    print(n, {k: str(v) for k, v in out.items()})

const = tropical.TropParams((1,), (1,))
print(tropical.trop_asymptotics(const, 1000, [4]))

# Leading terms: with alpha_k ~ t^(A_k), beta_k ~ t^(B_k), the valuation of
# m_ij is min(A_i, B_j).
lead = tropical.TropParams((0, 1, F(3, 2)), (F(1, 2), 2))
print(tropical.detrop_value(lead, 2, 1, 3), min(lead.a(2), lead.b(1)))
