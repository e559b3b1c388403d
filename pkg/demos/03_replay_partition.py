"""From one verified rollout to the training signal.

Each verification round leaves an anchor and an accepted count r.  Replaying
the drafted block from the anchor gives student and teacher distributions
for every block position; positions up to r are the accepted set and the
rest (the first failure and everything after it) the rejected set, with
weights gamma^(k-1).
"""

from _common import small_models
from specdistill.corpus import EOS
from specdistill.replay import collect_replay
from specdistill.trainer import Objective, step_loss
from specdistill.engine import speculative_decode

runner, target, draft = small_models()
K = 8
r = speculative_decode(target, draft, runner.pool[0], K, 40, eos_token=EOS)
print("prompt  :", runner.vocab.decode(r.prompt))
print("rollout :", runner.vocab.decode(r.y))
print(f"{r.n_blocks} rounds, accepted counts {[b.accepted for b in r.blocks]}, anchors {[b.anchor for b in r.blocks]}\n")

table = collect_replay(r, target, draft, gamma=0.8)
g = table.groups[0]
print(" m  k  token  label      weight  p(token)  q(token)")
q = g.student(draft).detach()
for i in range(min(g.n_entries, 2 * K)):
    tok = int(g.token[i])
    print(f"{int(g.m[i]):2d} {int(g.k[i]):2d}  {runner.vocab.decode([tok])!r:6} "
          f"{'accepted' if g.accepted[i] else 'rejected':9} {float(g.weight[i]):.3f}   "
          f"{float(g.teacher_logp[i, tok].exp()):.3f}     {float(q[i, tok].exp()):.3f}")

rep, _ = step_loss(draft, table.groups, Objective())
print(f"\n|I_acc| = {table.n_acc}, |I_rej| = {table.n_rej}, Z = {table.Z:.3f}")
print(f"forward KL on accepted {rep.L_acc:.4f}, weighted reverse KL on rejected {rep.L_rej:.4f}, combined {rep.combined:.4f}")
