"""
Moments of a truncated multinomial
----------------------------------

Condition a multinomial count vector on a rectangular event and compare
the conditional variance of a linear combination with the reference
variance built from the conditional mean.
"""

from fractions import Fraction as F

from rectprob import MultinomialSpec, Rect, censored_moments, variance_reduction

spec = MultinomialSpec(6, (F(1, 8), F(3, 8), F(1, 2)))
r = Rect((0, 0, 0), (6, 6, 2))
mom = censored_moments(spec, r)
print("P(R) =", mom.event_prob)
print("mean =", [str(q) for q in mom.mu])

###############################################################################
# Both moment routes agree exactly

assert mom == censored_moments(spec, r, method="enumerate")

###############################################################################
# A unit combination loses variance. The combination orthogonal to the
# first two probabilities loses none.

p = spec.p
for c in [(1, 0, 0), (0, 1, 0), (-p[1], p[0], 0)]:
    print(c, variance_reduction(spec, r, c))
