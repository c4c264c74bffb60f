"""Uniform costs push the optimum to a cardinality extreme.

With c_j = c and d_j = d for all j, and no constant in the numerator, the
value of a pack depends only on its size k: ck/(dk + beta). That is monotone
in k, so the sign of c decides between the biggest packs and the empty one.
"""
import numpy as np

from lfspp import max_cardinality_pack, solve_oracle
from lfspp.generate import GeneratorConfig, generate
from lfspp.theory import verify_thm3

for c_range, label in (((1, 20), "c > 0"), ((-20, -1), "c < 0")):
    config = GeneratorConfig(n=10, m=5, density=0.3, cmin=c_range[0], cmax=c_range[1],
                             dmin=-5, dmax=20, beta=60, condition="uniform",
                             admissible=True)
    inst = generate(config, np.random.default_rng([4, 0]))
    best = solve_oracle(inst, collect_all=True)
    sizes = sorted({len(p) for p in best.all_optima})
    print(f"{label}: c={inst.c[0]} d={inst.d[0]} beta={inst.beta}")
    print(f"  {len(best.all_optima)} optima, sizes {sizes}, value {best.optimal_value}")
    print(f"  largest pack size {len(max_cardinality_pack(inst))}")
    report = verify_thm3(inst)
    print(f"  verified: {report.holds} ({report.detail})")
