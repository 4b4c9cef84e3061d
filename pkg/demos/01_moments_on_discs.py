# %% [markdown]
# # Moments along the discs through the pole
#
# The straight discs through z_o = (0, 1) are
# D_a(tau) = (c (tau - 1) a, c (tau - 1) + 1) with c = 1 / (1 + |a|^2).
# A boundary function extends holomorphically along D_a exactly when every
# moment  integral tau^N f(D_a(tau)) dtau  vanishes.  Everything below is exact.

# %%
from holext import Z1, Z1BAR, Z2, Z2BAR, GComplex, disc_eval, disc_pullback, moment, moment_symbolic
from holext.discs import circle_point
from holext.report import format_param

a = GComplex(1)
tau = circle_point(2)          # (-3 + 4i) / 5, exactly on the unit circle
z1, z2 = disc_eval(a, tau)
print("D_1(tau) =", z1, z2, "  |z|^2 =", z1.abs2() + z2.abs2())

# %% [markdown]
# Pulling |z1|^2 back to the circle gives a Laurent polynomial; its residue is
# the moment mu with G = 2 pi i mu.

# %%
f = Z1 * Z1BAR
print("pullback of |z1|^2 on D_1:", disc_pullback(f, a))
print("mu(a=1, N=0) =", moment(f, a, 0))
print("mu(a=1, N=0) for conj(z2):", moment(Z2BAR, a, 0))
print("holomorphic data have no moments:", moment(Z1**3 + Z2, GComplex(2, -1), 0))

# %% [markdown]
# Keeping a formal, the moment is a polynomial in (a, conj a) divided by
# (1 + |a|^2)^L.  A nonzero polynomial here means some disc sees an obstruction.

# %%
for N in range(3):
    print(f"N={N}:", format_param(moment_symbolic(Z1 * Z1BAR**3, N)))
