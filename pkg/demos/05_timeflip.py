"""When does running a channel in a superposition of time directions help?

The time-flip advantage has an exact characterization: delta_u' < 0 if and
only if 0 < alpha_y * p < 1 - 2 * alpha_z * p. This demo checks the predicate
against the computed advantage on a sweep, then hits the point of maximal
advantage, where the total uncertainty drops by a full bit.
"""

import numpy as np

from maeur import PauliChannel, timeflip_advantage

alpha = (0.5, 0.3, 0.2)
print(f"sweep at alpha = {alpha}:")
print("  p      delta_u'   predicted advantaged?")
for p in np.linspace(0.1, 1.0, 10):
    verdict = timeflip_advantage(PauliChannel(float(p), alpha))
    print(
        f"  {p:4.2f}  {verdict.delta_u:+10.6f}   "
        f"{verdict.necessary_condition_met}"
    )

print()
print("maximal advantage sits at alpha_z = 0, alpha_y = 1/(2p):")
for p in (0.5, 0.75, 1.0):
    ay = 1 / (2 * p)
    verdict = timeflip_advantage(PauliChannel(p, (1 - ay, ay, 0.0)))
    print(f"  p = {p:4.2f}, alpha_y = {ay:.4f}:  delta_u' = {verdict.delta_u:+.9f}")
