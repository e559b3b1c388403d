"""Why the drafter cannot produce its own training rollouts.

A block drafter conditions on target hidden states.  Left alone for a long
span it keeps reusing stale conditioning and drifts into repetition, while
target-verified rollouts stay as varied as the corpus.  Distinct-n ratios
make the difference visible.
"""

import numpy as np

from _common import small_models
from specdistill.engine import draft_only_rollout, repetition_report, speculative_decode
from specdistill.corpus import EOS

runner, target, draft = small_models()
vocab = runner.vocab
alone, verified = [], []
for prompt in runner.pool[:12]:
    toks, rep = draft_only_rollout(target, draft, prompt, 48)
    alone.append(rep.distinct)
    r = speculative_decode(target, draft, prompt, 8, 48, eos_token=EOS)
    verified.append(repetition_report(r.y).distinct)
    if len(alone) == 1:
        print("prompt        :", vocab.decode(prompt))
        print("drafter alone :", vocab.decode(toks))
        print("verified      :", vocab.decode(r.y))

print("\nmean distinct-n over 12 prompts")
for n in (1, 2, 3, 4):
    a = np.mean([d[n] for d in alone])
    v = np.mean([d[n] for d in verified])
    print(f"  n={n}: drafter alone {a:.3f}   target-verified {v:.3f}")
