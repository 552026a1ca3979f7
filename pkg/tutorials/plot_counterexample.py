"""
When the ordering fails
-----------------------

The ordering only holds for rects centred on s/2. An off-centre rect
can become more likely as n moves away from t/2.
"""

from rectprob import check_theorem1, format_decimal, make_symmetric_core, scan_over_n
from rectprob.demos import COUNTER_RECT, COUNTER_S, counterexample

rec = counterexample()
print(f"P_5 = {rec.p_n}, P_6 = {rec.p_n_prime}, violated: {rec.violated}")

###############################################################################
# The whole scan for the off-centre rect

for n, q in enumerate(scan_over_n(COUNTER_S, COUNTER_RECT)):
    print(n, format_decimal(q, 4))

###############################################################################
# A symmetric core on the same urn behaves

core = make_symmetric_core(COUNTER_S, (1, 2))
print(core, check_theorem1(COUNTER_S, core).ok)
