"""
=====================================
Dictionary embeddings and concat space
=====================================

Every sense also gets a dictionary embedding: the average of contextual
vectors over a token plan that repeats the sense's lemma, adds all
synset lemmas and then the gloss words. Normalized sense and dictionary
halves concatenate into a 2D-dim space, and a duplicated contextual
vector ranks in that space exactly as the average of its two D-dim
similarities - the identity that makes the merge free at query time.
"""
import numpy as np

from sensevec import (
    build_gloss_token_plan,
    concat_sense,
    cosine,
    duplicate_contextual,
)
from sensevec.inventory import SenseInventory, Synset, SynsetId

# a miniature in-memory inventory with one synset
sid = SynsetId("v", 1740)
synset = Synset(sid, ("cook", "fix", "ready"), "verb.creation", (),
                "prepare for eating")
inv = SenseInventory({sid: synset}, {"cook%2:36:00::": sid}, {})

plan = build_gloss_token_plan("cook%2:36:00::", inv)
print("token plan for cook%2:36:00:: ->", list(plan.tokens))

rng = np.random.default_rng(0)
v_sense = rng.normal(size=8)
v_dict = rng.normal(size=8)
c = rng.normal(size=8)

merged = concat_sense(v_sense, v_dict)
print(f"\nconcat vector length: {merged.size} (two unit-norm halves)")

combined = cosine(duplicate_contextual(c), merged)
averaged = (cosine(c, v_sense) + cosine(c, v_dict)) / 2
print(f"cosine in concat space:      {combined:.8f}")
print(f"mean of D-dim similarities:  {averaged:.8f}")
assert abs(combined - averaged) < 1e-6
