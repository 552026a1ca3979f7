"""
Exhaustive ordering sweep
-------------------------

Check every symmetric core with up to four colours and at most five balls
per colour. Each check covers both monotone ranges, the mirror symmetry
and the integer inequality on the convolution profile.
"""

import time

from rectprob import sweep_ordering

start = time.perf_counter()
checks = sweep_ordering(max_m=4, max_s=5)
bad = [c for c in checks if not c.ok]
print(f"{len(checks)} cores, {len(bad)} failing, {time.perf_counter() - start:.1f}s")

# a few rows as they would appear in the CLI's CSV output
for c in checks[:5]:
    print(c.row())
