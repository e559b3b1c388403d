"""Shared setup for the demo scripts: a small trained target and SFT drafter.

The first demo that needs them trains both (about a minute on one core) and
leaves them under ``runs/demo``; later demos load the checkpoints.
"""

from pathlib import Path

import torch

from specdistill.checkpoint import load_model
from specdistill.experiments import Runner, flagship_plan

OUT = Path(__file__).resolve().parent.parent / "runs" / "demo"

SMALL_SETTINGS = {
    "corpus": {"size": 600, "splits": {"train": 0.8, "val": 0.05, "prompts": 0.05, "holdout": 0.1}},
    "target_model": {"d_model": 64, "n_layers": 3, "n_heads": 2, "d_ff": 256, "max_seq_len": 200},
    "target_train": {"epochs": 6, "lr": 3e-3},
    "n_pool": 24,
    "n_holdout": 16,
    "sft": {"epochs": 4, "max_response_len": 48},
    "continue_sft": {"epochs": 4, "max_response_len": 48},
    "opd": {"epochs": 4, "max_response_len": 48},
    "eval_max_new_tokens": 48,
}


def small_runner(seeds=(0,)) -> Runner:
    torch.set_num_threads(1)
    return Runner(flagship_plan(list(seeds), SMALL_SETTINGS), OUT, progress=lambda m: print("  ..", m))


def small_models():
    """(runner, target, sft drafter), training them on first use."""
    runner = small_runner()
    if not (OUT / "checkpoints" / "sft_s0.ckpt").exists():
        print("training a small target and SFT drafter under", OUT)
        runner.run_stages(["corpus", "target", "sft"])
    runner._need_target()
    draft = load_model(OUT / "checkpoints" / "sft_s0.ckpt", target=runner.target)
    return runner, runner.target, draft
