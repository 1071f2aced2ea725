# coding: utf-8

# # Cumulant generating functions and Cramer rate functions
#
# For a finite-valued observable, the cumulant generating function
# Gamma(theta) = log E exp(theta L) is smooth and convex; its Legendre
# conjugate Gamma*(x) is the large-deviation rate of seeing an empirical
# mean near x.  The Cramer function is C(x) = -Gamma*(x).
#
#     python3 demos/05_rate_functions.py

import math

from phasecat import (DiscreteObservable, bernoulli, binary_entropy, cgf,
                      cramer, legendre)

# A biased coin.

p = 0.3
obs = bernoulli(p)
print(f"Bernoulli({p}): mean = {obs.mean}")

# Gamma(0) = 0 always, and Gamma matches the closed form
# log(1 - p(1 - e^theta)) to machine precision.

for theta in (-2.0, 0.0, 1.0):
    closed = math.log(1.0 - p * (1.0 - math.exp(theta)))
    print(f"  Gamma({theta:+.0f}) = {cgf(obs, theta):+.12f}   "
          f"closed form {closed:+.12f}")

# The rate function vanishes exactly at the mean and grows toward the
# edges of the support; for a Bernoulli it is the relative entropy
# x log(x/p) + (1-x) log((1-x)/(1-p)).

print("\n  x     Gamma*(x)        relative entropy")
for k in range(1, 10):
    x = k / 10.0
    closed = x * math.log(x / p) + (1 - x) * math.log((1 - x) / (1 - p))
    print(f"  {x:.1f}   {legendre(obs, x):.12f}   {closed:.12f}")

# For the fair coin the rate is an entropy defect: C(x) = S(x) - log 2
# with S the binary entropy function.

fair = bernoulli(0.5)
print("\nfair coin:")
for x in (0.2, 0.5, 0.8):
    print(f"  C({x}) = {cramer(fair, x):+.9f}   "
          f"S(x) - log 2 = {binary_entropy(x) - math.log(2.0):+.9f}")

# Any finite distribution works the same way, not only coins.

skewed = DiscreteObservable(((-1.0, 0.25), (0.0, 0.5), (3.0, 0.25)))
print(f"\nthree-point observable, mean = {skewed.mean}")
for x in (-0.5, skewed.mean, 1.0, 2.5):
    print(f"  Gamma*({x:+.2f}) = {legendre(skewed, x):.9f}")
