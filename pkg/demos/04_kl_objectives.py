"""The two KL directions and what they reward.

Forward KL D(p||q) is a cross-entropy against the target up to its entropy,
so it asks the drafter to cover everything the target might say.  Reverse
KL D(q||p) averages over the drafter's own mass, so it punishes confident
drafter modes the target finds unlikely.  Both identities are checked
numerically below.
"""

import numpy as np
import torch

from specdistill.losses import kl_identity_check, loss_accepted, loss_rejected, rejected_weights

p = torch.log(torch.tensor([[0.9, 0.1]], dtype=torch.float64))
q = torch.log(torch.tensor([[0.6, 0.4]], dtype=torch.float64))
print(f"forward KL(p=[0.9,0.1] || q=[0.6,0.4]) = {float(loss_accepted(p, q)[0]):.5f}")
print(f"reverse KL(q || p)                    = {float(loss_rejected(p, q, [1], 0.8)[0]):.5f}")

rep = kl_identity_check([0.7, 0.2, 0.1], [0.3, 0.3, 0.4])
print(f"\ncross-entropy {rep.J_acc:.6f} = entropy {rep.H_p:.6f} + KL(p||q) {rep.KL_pq:.6f}")
print(f"drafter-weighted log ratio {rep.J_rej:.6f} = KL(q||p) {rep.KL_qp:.6f}")

print("\nrejected-position weights, gamma = 0.8:", rejected_weights(range(1, 9), 0.8).tolist())

# a bimodal target and a drafter covering one mode: the two directions disagree
target = np.array([0.48, 0.04, 0.48])
for name, cand in (("covers both modes", [0.45, 0.10, 0.45]), ("commits to one mode", [0.90, 0.05, 0.05])):
    r = kl_identity_check(target, cand)
    print(f"{name:20} forward {r.KL_pq:.3f}  reverse {r.KL_qp:.3f}")
