# %% [markdown]
# The rank-one family of lambda-connections in harmonic coordinates.  A
# harmonic line (nu, theta') sweeps out the section
#   lambda -> (nu + lambda c(theta'), theta' - lambda c(nu)):
# Higgs data at lambda = 0, a flat connection at lambda = 1.  The
# antilinear involution sigma' covers lambda -> -1/conj(lambda) and fixes
# exactly this family, which the classifier certifies coefficient by
# coefficient.

# %%
from hodgekit import (HarmonicLine, PolySection, Scalar,
                      classify_invariant_section, from_harmonic, gm_act,
                      harmonic_from_point, prefered_section, sigma_prime)

h = HarmonicLine(nu=(Scalar.gaussian(1, 2),), theta_prime=(Scalar.i(),))
print("at lambda=0 (Higgs):", prefered_section(h, Scalar.zero()))
print("at lambda=1 (flat): ", prefered_section(h, Scalar.one()))

# %% sigma' sends the value at lambda to the value at -1/conj(lambda)
lam = Scalar.gaussian(2, -3)
p = prefered_section(h, lam)
mu = -(lam.conj().inv())
print("sigma'(pref(h, 2-3i)) == pref(h, -1/conj):",
      sigma_prime(p) == prefered_section(h, mu))
print("sigma' is an involution:", sigma_prime(sigma_prime(p)) == p)

# %% the torus scales the (1,0)-operator data and the parameter together
q = gm_act(Scalar.rational(5), p)
print("t=5 moves lambda to", q.lam, "and fixes beta:", q.beta == p.beta)

# %% classification: sections of the family and nothing else
sec = from_harmonic(h)
print("the genuine section:", classify_invariant_section(sec)[0])
bumped = PolySection(beta_coeffs=(sec.beta_coeffs[0], (Scalar.one(),)),
                     eta_coeffs=sec.eta_coeffs)
print("a perturbed section:", classify_invariant_section(bumped)[0])
deg2 = PolySection(beta_coeffs=sec.beta_coeffs + ((Scalar.one(),),),
                   eta_coeffs=sec.eta_coeffs)
print("any degree-2 section:", classify_invariant_section(deg2)[0])

# %% the family separates points fiberwise: invert evaluation anywhere
print("inverted back to h:", harmonic_from_point(p) == h)
