"""Cross-check the closed forms against explicit density-matrix evolution.

Every number the fast scan layer produces comes from closed-form correlation
coefficients. This demo rebuilds the same quantities the slow way — Kraus
operators, 4x4 superchannel, partial traces, eigenvalues — and shows the two
paths agree to machine precision on random channels.
"""

import numpy as np

from maeur import verify_oracle_equivalence

failures = verify_oracle_equivalence(samples=200, seed=7)
if failures:
    print("mismatches found:")
    for line in failures:
        print(" ", line)
else:
    print("200 random channels x 3 processes: closed form and brute force")
    print("agree on both the total uncertainty and the bound within 1e-9.")
