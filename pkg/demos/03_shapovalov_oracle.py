"""The brute-force oracle: exact Gram matrices on multiplicity spaces.

Run: python demos/03_shapovalov_oracle.py
"""
import random
from fractions import Fraction as F

from vermasig import (
    exact_signature,
    gram_on_multiplicity,
    peel_decompose,
    shapovalov_norm,
    singular_basis,
)
from vermasig.sigchar import is_generic

print("Norms of F^k v in a single Verma module (sign changes drive everything):")
for k in range(5):
    print(f"  (F^{k} v, F^{k} v) at weight 5/2 =", shapovalov_norm(F(5, 2), k))

lams = (F(23, 10), F(17, 10), F(-2, 5))
print("\nLevel-2 singular vectors of the triple product, exact rational rows:")
sb = singular_basis(lams, 2)
for row in sb.vectors:
    print("  ", tuple(str(v) for v in row))

print("\nGram matrix of the induced form on that multiplicity space:")
gram = gram_on_multiplicity(lams, 2)
for row in gram.entries:
    print("  ", tuple(str(v) for v in row))
print("inertia (pos, neg):", exact_signature(gram))

print("\nAgreement with character peeling on random generic instances:")
rng = random.Random(7)
for _ in range(6):
    n = rng.choice([2, 3])
    while True:
        ws = [F(rng.randint(-60, 60), rng.choice([7, 11, 13])) for _ in range(n)]
        if all(is_generic(w) for w in ws) and is_generic(sum(ws)):
            break
    m = rng.randint(1, 4)
    inertia = exact_signature(gram_on_multiplicity(ws, m))
    entry = peel_decompose(ws, m).entry(m)
    print(f"  n={n} m={m}: gram {inertia} peel {(entry.pos, entry.neg)}",
          "OK" if inertia == (entry.pos, entry.neg) else "MISMATCH")
