"""Map the switch advantage over the whole bias simplex at several p values.

Scans alpha = (ax, ay, 1-ax-ay) on a step-1/100 grid and reports how much of
the simplex shows a strict switch advantage (delta_u < 0). No advantage
exists anywhere for p <= 0.5; a growing region appears beyond that.
Writes one CSV per p value for later plotting.
"""

from maeur import SweepSpec, emit_csv, scan_simplex

for p in (0.25, 0.50, 0.75, 1.00):
    spec = SweepSpec(process="compare_switch", fixed_p=p, simplex_step=100)
    rows = scan_simplex(spec)
    emit_csv(rows, f"switch_simplex_p{int(p * 100):03d}.csv")
    advantaged = [r for r in rows if r.delta_u < -1e-9]
    best = min(rows, key=lambda r: r.delta_u)
    print(
        f"p = {p:4.2f}: {len(advantaged):5d} / {len(rows)} grid points "
        f"advantaged; strongest delta_u = {best.delta_u:+.6f} at "
        f"alpha = ({best.alpha_x:.2f}, {best.alpha_y:.2f}, {best.alpha_z:.2f})"
    )
