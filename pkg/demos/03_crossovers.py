"""Locate the error probabilities where the switch starts to help.

For an asymmetric bias alpha = (0.5, 0.1, 0.4) the x-measurement term and the
total uncertainty cross their direct-use counterparts at different points;
bisection pins both roots down to 1e-6.
"""

from maeur import find_crossover

alpha = (0.5, 0.1, 0.4)
p_x = find_crossover(alpha, "switch", quantity="x_uncertainty")
p_total = find_crossover(alpha, "switch", quantity="total")

print(f"bias vector alpha = {alpha}")
print(f"x-uncertainty crossover:  p = {p_x:.6f}")
print(f"total-uncertainty crossover:  p = {p_total:.6f}")
print()
print("Below the first root the switch never helps; between the two roots it")
print("helps the x measurement but not yet the total; above the second root")
print("the total uncertainty is strictly reduced.")
