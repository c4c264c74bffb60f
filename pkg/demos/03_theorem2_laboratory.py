"""When must an optimum be prime?

Two sufficient conditions are tested here. The first asks for positive costs
with negative weights. The second works pairwise: every extension T of a pack
H1 must carry a block ratio sum(c_T)/sum(d_T) above the current value Z(H1).
"""
import numpy as np

from lfspp import Instance, classify, solve_oracle
from lfspp.generate import GeneratorConfig, generate
from lfspp.theory import (
    check_extension_gain, check_thm2a_condition, check_thm2b_condition,
    paper_instance, verify_thm2_conclusion,
)

inst = Instance(A=[[1, 1, 0], [1, 0, 1]], c=(1, 2, 5), d=(-1, -1, -1), beta=4)
print("c > 0, d < 0:", check_thm2a_condition(inst).holds)
report = verify_thm2_conclusion(inst, "2a")
print("  exists prime optimum:", report.holds, " all optima prime:", report.all_optima_prime)
print("  extending any pack helps:", check_extension_gain(inst).holds)
print()

paper = paper_instance()
print("the 2x3 counterexample against both conditions")
print("  sign condition:", check_thm2a_condition(paper).detail)
print("  pairwise condition:", check_thm2b_condition(paper).detail)
print()

# Zero costs alone only produce ties: with d < 0, adding a free column
# shrinks the denominator, so a positive ratio always improves. The first
# redundant optimum is therefore an all-zero cost vector.
def first_redundant_optimum(config, tag, want_positive):
    for seed in range(10_000):
        inst = generate(config, np.random.default_rng([tag, seed]))
        best = solve_oracle(inst, collect_all=True)
        if want_positive and best.optimal_value <= 0:
            continue
        bad = [p for p in best.all_optima if not classify(inst, p).is_prime]
        if bad:
            return seed, inst, best, bad[0]


for label, cmin, positive in (("c_j >= 0", 0, False), ("c_j of either sign", -3, True)):
    config = GeneratorConfig(n=5, m=3, cmin=cmin, cmax=3, dmin=-5, dmax=-1, beta=25,
                             admissible=True)
    seed, inst, best, pack = first_redundant_optimum(config, 3, positive)
    print(f"{label}: seed {seed} has redundant optimum {pack} at value {best.optimal_value}")
    print(f"  c = {inst.c}  d = {inst.d}  beta = {inst.beta}  "
          f"({len(best.all_optima)} optima)")
