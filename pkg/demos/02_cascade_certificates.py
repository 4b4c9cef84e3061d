# %% [markdown]
# # Certificates and the coefficient cascade
#
# `certify` decides whether boundary data on the sphere in C^2 extend to the
# ball.  For data without conj(z2) the verdict comes with the leading Fourier
# mode of  t^l_o * mu(t e^{i theta}, N)  as t -> oo, which isolates a single
# antiholomorphic coefficient.

# %%
from holext import cascade, certify, leading_asymptotic, parse_poly
from holext.report import certificate_report, dumps

for text in ["z1*~z1", "z2*~z2 + z1*~z1", "~z1^3 + z1*~z1", "~z1*z2", "~z2", "z1^2 + 3*z2"]:
    cert = certify(parse_poly(text))
    print(f"{text:>18}:", dumps(certificate_report(cert)).replace("\n", " "))

# %% [markdown]
# The leading asymptotic at a chosen N, as a map frequency -> coefficient.

# %%
print(leading_asymptotic(parse_poly("~z1^2"), 1))
print(leading_asymptotic(parse_poly("z1*~z1^2 + (1/2)*~z1^3*z1^2"), 1))

# %% [markdown]
# Replaying the cascade under the hypothesis that all moments vanish lists the
# coefficients that hypothesis kills, level by level.

# %%
cert = cascade(parse_poly("z1 + ~z1*z2^2 + z1^2*~z1"), assume_moments_vanish=True)
for step in cert.steps:
    print(step)
print("what would remain:", cert.extension)
