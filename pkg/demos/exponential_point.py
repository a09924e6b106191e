# The exponential point
#
# The Toeplitz matrix with generating function e^x has all Schoenberg
# parameters zero except gamma = 1. Everything about it is explicit, which
# makes it the natural first thing to look at.

from fractions import Fraction

from tptoeplitz import chart, symfun, toeplitz

exp_params = symfun.SchoenbergParams(gamma=1)

# Coefficients are 1/k!.
print(symfun.edrei_expand(exp_params, 6))

# The rank-5 truncation and its d- and q-parameters. The d-list is
# (i-1)!/(n+1-i)! and q_k = k(n+1-k).
u = toeplitz.truncate(exp_params, 5)
fp = toeplitz.d_map(u)
print("d:", [str(x) for x in fp.d])
print("q:", [str(x) for x in fp.q])

# Standard coordinates are m_ij = 1/(i+j-1) ...
ch = chart.toeplitz_chart(u)
print("m_23 =", ch[(2, 3)])

# ... and the vertex labels form the multiplication table.
labels = chart.vertex_labels(ch)
for i in range(1, 6):
    print(" ".join(f"{str(labels(i, j)):>3}" for j in range(1, 7 - i)))

# Labels are divergence-free, and the quantum parameters sit on the sink
# diagonal as products of the two incoming arrow labels.
print(chart.is_divergence_free(labels))
print(chart.diagonal_q(labels, 5))

# Change a single coordinate and both the Toeplitz property and the balance
# condition break.
bad = ch.replace((1, 2), Fraction(1))
print(chart.is_toeplitz_matrix(chart.chart_to_matrix(bad)),
      chart.is_divergence_free(chart.vertex_labels(bad)))
