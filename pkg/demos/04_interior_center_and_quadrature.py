# %% [markdown]
# # Lines through the centre versus discs through a boundary point
#
# |z1|^2 is constant on every circle cut from the sphere by a complex line
# through the origin, so it extends along all of them.  It still does not
# extend to the ball, and the discs through the pole see this.

# %%
import numpy as np

from holext import Z1, Z1BAR, GComplex, moment
from holext.numeric import QuadConfig, disc_fourier_test, interior_center_demo, moment_quad

rep = interior_center_demo(lines=20)
worst = max(r["max_negative_fourier"] for r in rep["lines_through_origin"])
print("largest negative Fourier mode over 20 lines through 0:", worst)
print("disc through the pole:", rep["disc_through_pole"])
print("certificate:", rep["certificate"])

# %% [markdown]
# The trapezoid rule is exact for these trigonometric polynomials once the node
# count exceeds the bandwidth; compare with the exact residues.

# %%
f = Z1**2 * Z1BAR + Z1BAR**3
for literal in ["1", "1/2+2i", "-3i"]:
    a = GComplex.parse(literal)
    exact = complex(moment(f, a, 1))
    quad = moment_quad(f, complex(a), 1, QuadConfig(257))
    print(f"a={a}: exact {exact:.15f}  quadrature {quad:.15f}  |diff| {abs(exact - quad):.1e}")

print("negative modes on D_a for growing |a|:",
      [round(disc_fourier_test(Z1 * Z1BAR, t), 6) for t in np.array([0.5, 1, 2, 4, 8])])
