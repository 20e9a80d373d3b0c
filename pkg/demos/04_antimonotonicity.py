"""
Invariants shrink up the stratum order
======================================

Sample planes in F^4 against a generic arrangement of five hyperplanes,
then compare invariants along every comparable pair of realized strata.
"""

from kadjoint.arrangement import random_arrangement
from kadjoint.decompose import (
    classify_samples,
    verify_antimonotonicity,
    verify_lower_set_inclusion,
    verify_nbc_theorem,
)

a = random_arrangement(5, 4, 6, generic=True)
print("normals:", [h.normal for h in a.hyperplanes])

report = classify_samples(a, 2, 200, seed=1)
realized, total = report.coverage
print(f"{realized} of {total} strata realized, violations: {report.violations}")

for rec in report.strata:
    inv = rec.invariants
    print(f"  rank {rec.stratum_flat.rank}: I={inv.independence_numbers} |w|={inv.signless_whitney()}"
          f" samples={len(rec.representatives)}")

print("anti-monotonicity violations:", verify_antimonotonicity(report))
print("lower-set inclusion violations:", verify_lower_set_inclusion(report))
print("NBC violations:", verify_nbc_theorem(report, [None, [4, 3, 2, 1, 0]]))
