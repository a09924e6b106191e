# Characters of the infinite symmetric group
#
# Thoma's formula gives extremal characters from normalized Schoenberg
# parameters. Their average over S_n is the coefficient c_n.

from fractions import Fraction as F

from tptoeplitz import characters, symfun

p = symfun.SchoenbergParams((F(1, 2), F(1, 6)), (F(1, 6),), F(1, 6), thoma=True)
print(characters.thoma_value(p, characters.CycleType((3, 2))))
for n in range(1, 6):
    print(n, *characters.thoma_check(p, n))

# Normalized irreducible characters of balanced two-row shapes at a
# transposition approach the Thoma value at alpha = (1/2, 1/2).
for row in characters.vk_experiment("two-row", characters.CycleType.transposition, range(4, 25, 4)):
    print(row["n"], row["shape"], row["value"], row["abs_err"], [str(a) for a in row["a_ratios"]])

# Balanced hooks approach alpha = beta = (1/2), where a transposition has
# Thoma value 0.
for row in characters.vk_experiment("hook", (2,), [8, 16, 24]):
    print(row["n"], row["value"])
