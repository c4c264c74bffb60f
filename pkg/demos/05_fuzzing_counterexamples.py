"""Random search rediscovers the counterexample and shrinks it.

P1 claims every optimal pack is prime. It is false, and the fuzzer should find
out fast. Each hit is minimised by dropping columns and rows while the
violation persists, then logged as one parseable line.
"""
from lfspp import classify, solve_oracle
from lfspp.theory import FuzzConfig, fuzz_properties, parse_log_line

report = fuzz_properties(FuzzConfig(samples=300, seed=5, properties=("P1", "P4"),
                                    cmin=0, dmin=0, n=(2, 8)))
print(report.summary())
print("unexpected violations:", report.unexpected or "none")
print()



def no_prime_optimum(inst):
    best = solve_oracle(inst, collect_all=True)
    return best.optimal_value > 0 and not any(classify(inst, p).is_prime for p in best.all_optima)


# ties at value 0 count as violations too; skip those for the showcase
strict = [v for v in report.violations if no_prime_optimum(v.instance)]
print(f"{len(strict)} of {len(report.violations)} witnesses have no prime optimum at all")
smallest = min(strict, key=lambda v: (v.instance.n, v.instance.m))
print(f"smallest P1 witness (sample {smallest.sample}), shrunk from "
      f"{smallest.original.m}x{smallest.original.n} to {smallest.instance.m}x{smallest.instance.n}:")
print(" ", smallest.log_line())

_, _, inst = parse_log_line(smallest.log_line())
best = solve_oracle(inst, collect_all=True)
for pack in best.all_optima:
    print(f"  optimum {pack} value {best.optimal_value}: {classify(inst, pack).kind}")
