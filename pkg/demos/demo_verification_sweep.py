"""
Randomized verification sweep
=============================

Every scalar inequality and every bound is checked against sampled inputs.
Suites are split into eight seeded chunks, so the summary is identical for
any worker count; set MONOGAMY_THREADS to change the pool size.
"""

# %%
import time

from monobound import verify

# %%
t0 = time.perf_counter()
results = verify.run_suites(seed=0, samples=10_000)
print(verify.summary(results), end="")
print(f"{time.perf_counter() - t0:.1f} s, all passed: {all(r.passed for r in results)}")

# %%
# A deliberately broken kernel shows what a failure looks like: the summary
# marks the suite FAIL and prints replayable inputs.
from monobound import ineq

original = ineq.case1_rhs
ineq.case1_rhs = lambda t, k, x, m: original(t, k, x, m) + 2 * m * x * t**x / k
try:
    (bad,) = verify.run_suites(seed=0, samples=1000, only=["lemma2.1(i)"])
    print(verify.summary([bad]), end="")
finally:
    ineq.case1_rhs = original
