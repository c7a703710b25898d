"""Sweep the error probability for a symmetric x/y channel inside the switch.

For alpha = (0.5, 0.5, 0) the switch starts to beat direct single use exactly
at p = 0.5, and at p = 1 it removes the uncertainty entirely (U_sw = 0).
Writes the sweep to switch_sweep.csv for later plotting.
"""

from maeur import SweepSpec, emit_csv, sweep_1d

spec = SweepSpec(
    process="compare_switch",
    alpha=(0.5, 0.5, 0.0),
    p_grid=(0.0, 1.0, 500),
)
rows = sweep_1d(spec)
emit_csv(rows, "switch_sweep.csv")
print(f"wrote {len(rows)} rows to switch_sweep.csv")
print()
print("  p      U_direct   U_switch   delta")
for row in rows[:: len(rows) // 10]:
    print(f"  {row.p:5.2f}  {row.u_su:9.6f}  {row.u_proc:9.6f}  {row.delta_u:+9.6f}")

first_win = next(r for r in rows if r.delta_u < -1e-9)
print()
print(f"first grid point with a strict switch advantage: p = {first_win.p:.3f}")
print(f"uncertainty at p = 1: U_switch = {rows[-1].u_proc:.2e}")
