"""
Bounds for more than three parties
==================================

The mixed-regime bound needs tail measures E(A|B_i...B_{N-1}) next to the
pairwise ones. For a general mixed tail these are not computable here, so
the demo builds a four-qubit state whose B2B3 block is a two-qubit system
embedded by an isometry; then E(A|B2B3) equals a two-qubit measure.
"""

# %%
import numpy as np

from monobound import measures, monogamy, verify
from monobound.ineq import BoundParams, alpha_min
from monobound.measures import MeasureKind
from monobound.monogamy import PartitionedMeasures

rng = np.random.default_rng(7)
kind = MeasureKind.CONCURRENCE

# %%
for trial in range(6):
    truth, e, tails, _ = verify.nparty_inputs(kind, rng)
    if min(*e, *tails) < 1e-12:
        print(f"trial {trial}: a pairwise measure vanishes, no ratio-based bound applies")
        continue
    k_split = max((tails[0] / e[0]) ** 2, (e[1] / tails[1]) ** 2)
    k_all = max((tails[0] / e[0]) ** 2, (tails[1] / e[1]) ** 2)
    print(f"trial {trial}: E_A|rest^2 = {truth**2:.4f}, pairwise = {np.round(e, 4)}, tails = {np.round(tails, 4)}")
    for m in (0, 1):
        alpha = alpha_min(m, 2)
        line = f"  m={m} alpha={alpha:.3f} truth^alpha={truth**alpha:.4e}"
        if k_split <= 1:
            p = BoundParams(alpha, 2, m, k_split)
            line += f" split={monogamy.thm3_bound(PartitionedMeasures(e, tails, 1), p):.4e}"
        if k_all <= 1:
            p = BoundParams(alpha, 2, m, k_all)
            line += f" all-splits={monogamy.cor4_bound(e, tails, p):.4e}"
        desc = monogamy.descending(e)
        if min(desc) > 1e-12:
            line += f" descending={monogamy.thm6_bound(desc, BoundParams(alpha, 2, m)):.4e}"
        print(line)

# %%
# Without tails, only the descending-order chain applies. Its five levels
# for the next sampled state with no vanishing pair:
while True:
    s = verify.encoded_four_qubit(rng)[0]
    truth, e = measures.all_measures(s)[kind]
    if min(e) > 1e-12:
        break
chain = monogamy.cor7_chain(monogamy.descending(e), BoundParams(6, 2, 2))
print("truth^6 =", truth**6)
for name, value in chain._asdict().items():
    print(f"  {name:12s} {value:.6e}")
