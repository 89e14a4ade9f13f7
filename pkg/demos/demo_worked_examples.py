"""
Measures of the three canonical worked examples
===============================================

Builds each five-coefficient three-qubit state, reduces it to the A|B and A|C
pairs and evaluates concurrence, convex-roof negativity and the Bures
measure. The closed forms 2*l0*sqrt(l2^2+l3^2+l4^2), 2*l0*l2 and 2*l0*l3 are
printed next to the numerical pipeline.
"""

# %%
import math

from monobound import measures, monogamy, qstate
from monobound.measures import MeasureKind

examples = {"I": qstate.EXAMPLE_I, "II": qstate.EXAMPLE_II, "III": qstate.EXAMPLE_III}

# %%
# Closed form against the purity / Wootters route.
for name, p in examples.items():
    s = qstate.acin_state(p)
    closed = qstate.closed_form_concurrences(p)
    numeric = (
        measures.concurrence_pure(s),
        measures.wootters_concurrence(qstate.reduced(s, {0, 1})),
        measures.wootters_concurrence(qstate.reduced(s, {0, 2})),
    )
    print(f"example {name}")
    for label, c, n in zip(("C_A|BC", "C_AB", "C_AC"), closed, numeric):
        print(f"  {label:7s} closed {c:.15f}  numeric {n:.15f}")

# %%
# The second example in negativity units: 2*sqrt(10)/9, 4/9 and 2*sqrt(3)/9.
s = qstate.acin_state(qstate.EXAMPLE_II)
print("Nc_A|BC", measures.negativity_pure(s), 2 * math.sqrt(10) / 9)
print("Nc_AB  ", measures.measure(MeasureKind.CREN, s, 0, 1), 4 / 9)
print("Nc_AC  ", measures.measure(MeasureKind.CREN, s, 0, 2), 2 * math.sqrt(3) / 9)

# %%
# Bures values of the third example and the ratio tau_2 that drives the
# descending-order correction. Rounding the two measures to five digits
# before dividing moves tau_2 in the fourth decimal.
s = qstate.acin_state(qstate.EXAMPLE_III)
e_ab = measures.measure(MeasureKind.BURES, s, 0, 1)
e_ac = measures.measure(MeasureKind.BURES, s, 0, 2)
print("E_B(AB) =", e_ab)
print("E_B(AC) =", e_ac)
print("tau_2 exact          =", monogamy.taus([e_ab, e_ac], 1.0)[0])
print("tau_2 from 5 digits  =", round(e_ab, 5) / round(e_ac, 5))
