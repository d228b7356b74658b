# %% [markdown]
# Quaternionic linear algebra and the family of complex structures over
# the sphere.  The triple (I, J, K) acts through exact real-linear
# operators; the stereographic dictionary identifies each point of the
# sphere with a structure x I + y J + z K, and both closed formulas for
# the family agree operator by operator.  The associated bundle over P^1
# is pure of weight one, and its real sections are rigid: exactly one
# passes through each point.

# %%
from hodgekit import (QuaternionicSpace, Scalar, SectionO1, h0_twist,
                      invariant_section_through, invariant_space_real_dimension,
                      quaternionic_sff_space, sigma_section, splitting_type,
                      sphere_combination, stereographic, structure_at,
                      structure_at_closed, twistor_bundle)

qs = QuaternionicSpace.standard(1)
print("I_0 == I:", structure_at(qs, Scalar.zero()) == qs.op_i())
print("I_1 == J:", structure_at(qs, Scalar.one()) == qs.op_j())
print("I_i == K:", structure_at(qs, Scalar.i()) == qs.op_k())

# %% a generic rational point of the sphere
lam = Scalar.gaussian("2/3", "-1/5")
pt = stereographic(lam)
print("lambda =", lam, "maps to", (pt.x, pt.y, pt.z))
op = structure_at(qs, lam)
print("I_lambda^2 == -1:",
      op.compose(op) == structure_at(qs, Scalar.zero()).compose(
          structure_at(qs, Scalar.zero())))
print("conjugation form == closed form:", op == structure_at_closed(qs, lam))
print("== x I + y J + z K:", op == sphere_combination(qs, pt))

# %% the involution of degree-one sections and its fixed family
v = (Scalar.one(), Scalar.zero())
constant = SectionO1(a=v, b=(Scalar.zero(), Scalar.zero()))
print("sigma of a constant section:", sigma_section(qs, constant))
sec = invariant_section_through(qs, list(v), Scalar.one())
print("invariant section through ((1,0), lambda=1): a =", sec.a)
print("it is sigma-fixed:", sigma_section(qs, sec) == sec)
print("real dimension of the fixed family:", invariant_space_real_dimension(qs))

# %% weight-one purity of the structure bundle
bundle = twistor_bundle(qs)
print("splitting type:", splitting_type(bundle), " h0 =", h0_twist(bundle, 0))

# %% no symmetric quadratic map commutes with both I and J
print("quaternionic quadratic maps: dim =", quaternionic_sff_space(1, 1))
print("complex-only control:      dim =",
      quaternionic_sff_space(1, 1, constraints="complex"))
