"""Acceptance under sampling, and what higher-entropy text costs.

Speculative sampling stays lossless at any temperature, but acceptance drops
as the target's next-token distribution spreads out.  The per-position NLL
profile compares held-out text from the training grammar with high-entropy
Markov text the target never saw.
"""

from _common import small_models
from specdistill.corpus import EOS, CorpusSpec, generate_sequences
from specdistill.metrics import bench_tau, nll_profile
from specdistill.sampling import SamplingSpec

runner, target, draft = small_models()
prompts = runner.holdout[:12]
for samp in (SamplingSpec(), SamplingSpec(temperature=0.6, top_p=0.95, top_k=20), SamplingSpec(temperature=1.0)):
    rep, _ = bench_tau(target, draft, prompts, 8, samp, seeds=(0, 1), max_new_tokens=48)
    print(f"temperature {samp.temperature:.1f} top_p {samp.top_p} top_k {samp.top_k}: tau {rep.tau_mean:.3f}")

vocab = runner.vocab
held = [vocab.encode(t, eos=True) for t in runner.corpus["holdout"][:40]]
markov = [vocab.encode(t, eos=True) for t in generate_sequences(CorpusSpec(generator="markov", size=40, seed=9, markov_alpha=1.0))]
for name, seqs in (("held-out grammar text", held), ("random Markov text", markov)):
    prof = nll_profile(target, seqs, bucket=24)
    print(f"\n{name}: overall NLL {prof.overall:.3f} nats/token")
    for (a, b), v in zip(prof.buckets, prof.mean_nll):
        print(f"  positions {a:3d}-{b:3d}: {v:.3f}")
