"""Every wgcd characterization as a strategy, cross-checked on one tuple.

The weighted gcd of (x_0, ..., x_n) under weights (q_0, ..., q_n) is the
largest d with d**q_i | x_i for every i.  Six independent routes compute
it; they must always agree.
"""

from wgcd import STRATEGIES, Counters, WeightedTuple, wgcd_auto

t = WeightedTuple((70352, 5760, 13824), (2, 2, 3))
print(f"values  {t.values}")
print(f"weights {t.weights.q}")
print()

print(f"{'strategy':<12} {'d':>4}  factor_calls  max_factored_bits")
for name in sorted(STRATEGIES):
    counters = Counters()
    d = STRATEGIES[name](t, counters=counters)
    print(
        f"{name:<12} {d:>4}  {counters.factor_calls:>12}  "
        f"{counters.max_factored_bits:>17}"
    )

print()
print("The auto pipeline only ever factors the reduced tuple's gcd:")
result = wgcd_auto(t)
for step in result.trace.steps:
    print(f"  {step.rule}: {step.values}")
print(f"  d = {result.d}")

print()
print("A sign flip or a zero coordinate changes nothing:")
for values in ((-70352, 5760, 13824), (0, 5760, 13824)):
    print(f"  wgcd{values} = {wgcd_auto(WeightedTuple(values, (2, 2, 3))).d}")
