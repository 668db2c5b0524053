"""Checking finitistic dimension bounds on concrete instances.

Run:  python3 demos/03_checking_bounds.py

Three situations: a bound whose hypotheses hold and whose inputs are all
exact (verified), a surjection that fails the Tor-vanishing hypothesis
(rejected, no inequality is claimed), and a run with a tiny resolution cap
where an input is only bounded below (undetermined).
"""

from findim.contexts import report_suite, verify_inequality


def show(rep):
    print(f"{rep.bound_id} on {rep.instance}: {rep.formula}")
    for h in rep.hypotheses:
        print(f"  [{h.status}] {h.name}")
    ins = ", ".join(f"{k}={v}" for k, v in rep.inputs.items())
    print(f"  inputs {ins}")
    print(f"  {rep.lhs} <= {rep.rhs}: {rep.verdict}\n")


show(verify_inequality("stratifying", {"R": "ut2", "e": [2]}))
show(verify_inequality("homo_ring", {"R": "nak3", "rad_power": 2}))
show(verify_inequality("triangular", {"S": "A2", "T": "A2", "M": {"simple": [1, 2]}}, cap=2))

counts = {}
for row in report_suite(cap=2):
    counts[row.verdict] = counts.get(row.verdict, 0) + 1
print(f"whole suite at cap 2: {counts}")
