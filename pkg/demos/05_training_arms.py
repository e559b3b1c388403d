"""Continued offline SFT against on-policy distillation, plus the ablations.

Runs a reduced version of the default experiment (one seed, small models)
and prints held-out acceptance length for every arm.  The full three-seed
plan is ``specdistill run-plan``; expect about 40 minutes on one core.
At this reduced size the arms sit close together and single-seed gates
can go either way.
"""

from _common import OUT, small_runner

runner = small_runner()
summary = runner.run()
print(f"\nheld-out greedy acceptance length (K={runner.settings['eval_K']}), seed 0")
for row in summary["rows"]:
    print(f"  {row['stage']:26} tau {row['tau_mean']:.3f}   tokens/round {row['tokens_per_round']:.3f}")
print("\ngates:")
for g in summary["gates"]:
    print(f"  {g['a']} vs {g['b']:26} {g['kind']:17} {'pass' if g['passed'] else 'fail'}")
print("\nreports, checkpoints, rollouts and logs are under", OUT)
