# %% [markdown]
# Filtrations as modules over the affine line.  A complete decreasing
# filtration of a vector space is the same data as a torus-equivariant
# free module spanned by z^(-p) v for an adapted basis; the fiber at 1 is
# the space back again and the fiber at 0 is the associated graded.
# Gluing two filtrations across the two charts of P^1 produces a bundle
# whose splitting type reads off purity.

# %%
from hodgekit import (FilteredSpace, Scalar, build_rees, fiber,
                      griffiths_check, recover_filtration, rees_p1)

one, zero = Scalar.one(), Scalar.zero()
e1, e2 = [one, zero], [zero, one]

# %% a full flag in dimension two
flag = FilteredSpace(2, {0: [e1, e2], 1: [e1]})
rm = build_rees(flag)
print("adapted weights:", rm.weights)
print("fiber at 1 has dimension", fiber(rm, 1))
print("fiber at 0 grades:", fiber(rm, 0))
print("roundtrip recovers the flag:", recover_filtration(rm).equal(flag))

# %% transversality: a connection may move each step down at most one
nabla_ok = [[zero, zero], [one, zero]]       # e1 -> e2
print("one-step drop passes:", griffiths_check(flag, [nabla_ok]))
deep = FilteredSpace(3, {0: [[one, zero, zero], [zero, one, zero],
                             [zero, zero, one]],
                         1: [[one, zero, zero], [zero, one, zero]],
                         2: [[one, zero, zero]]})
nabla_bad = [[zero] * 3 for _ in range(3)]
nabla_bad[2][0] = one                        # two steps down
print("two-step drop fails:", griffiths_check(deep, [nabla_bad]))

# %% purity: transverse lines glue to O(1) + O(1), a collapsed pair to
# O(2) + O(0); the weight only exists in the pure case
transverse = FilteredSpace(2, {0: [e1, e2], 1: [e2]})
_, report = rees_p1(flag, transverse)
print("transverse gluing:", report)
_, report = rees_p1(flag, flag)
print("degenerate gluing:", report)
