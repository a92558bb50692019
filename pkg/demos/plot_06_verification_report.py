"""
The full verification report and its negative controls
======================================================

"""

from sqalg import VerifyConfig, run_all
from sqalg.builtins import builtin_presentations
from sqalg.verify import single_mutations

report = run_all()
print(report.table())

# The same checks on corrupted inputs: every single-entry corruption of a
# square table or relation makes at least one entry fail.
caught = total = 0
for label, name, alg in single_mutations():
    reg = builtin_presentations()
    reg[name] = alg
    r = run_all(VerifyConfig(max_degree=12), reg)
    failed = [e.id for e in r.entries if e.status == "fail"]
    total += 1
    caught += bool(failed)
    if total <= 6 or not failed:
        print(f"{label:55s} -> {', '.join(failed[:3]) or 'UNDETECTED'}")
print(f"{caught}/{total} corruptions detected")
