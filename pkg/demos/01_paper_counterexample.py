"""A redundant pack can be the unique optimum.

Two rows, three columns. Column 1 clashes with both others, while columns 2
and 3 can sit together. Five packs exist and we score each one.
"""
from lfspp import classify, enumerate_packs, objective, solve_oracle
from lfspp.theory import paper_counterexample, paper_instance

inst = paper_instance()
print("instance:", inst)
print()

print("every pack, in lexicographic order:")
for pack in enumerate_packs(inst):
    kind = classify(inst, pack)
    print(f"  {str(pack):8} x={pack.bits}  value={str(objective(inst, pack)):5}  {kind.kind}")

best = solve_oracle(inst, collect_all=True)
print()
print(f"optimum {best.optimal_value} at {best.witness}; optima: {[str(p) for p in best.all_optima]}")

# {3} wins, yet adding column 2 keeps it feasible and drops the ratio to 7/12.
# So the best pack has a redundant column and no prime pack is optimal.
fixture = paper_counterexample()
print()
for label, ok in fixture.checks:
    print("PASS" if ok else "FAIL", label)
print("refutes 'some prime pack is optimal':", fixture.refuted)
