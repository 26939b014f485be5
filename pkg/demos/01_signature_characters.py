"""Signature characters of Verma modules and how tensor products peel apart.

Run: python demos/01_signature_characters.py
"""
from fractions import Fraction as F

from vermasig import multiply, peel_decompose, verma_character


def show_series(label, series, limit=6):
    terms = []
    for k, c in enumerate(series.coeffs[: limit + 1]):
        terms.append(f"({c.plain}+{c.twisted}s) e^[{series.weight(k)}]")
    print(f"{label} = " + " + ".join(terms) + " + ...")


print("A Verma module with negative highest weight alternates sign by level:")
show_series("ch M(-3/2)", verma_character(F(-3, 2), 6))

print("\nA positive weight keeps a positive block before alternating:")
show_series("ch M(5/2)", verma_character(F(5, 2), 6))

print("\nCharacters multiply like series; s^2 = 1 inside coefficients:")
product = multiply(verma_character(F(-1, 2), 6), verma_character(F(-1, 2), 6))
show_series("ch M(-1/2) x M(-1/2)", product)

print("\nPeeling the product into shifted Verma characters reads off each")
print("multiplicity space's inertia (pos, neg); pos+neg is its dimension:")
for lams in ([F(-1, 2), F(-1, 2)], [F(5, 2), F(-7, 10)], [F(23, 10), F(17, 10), F(-2, 5)]):
    dec = peel_decompose(lams, 6)
    cells = ", ".join(f"m={e.level}:({e.pos},{e.neg})" for e in dec.entries)
    print(f"  weights {tuple(str(l) for l in lams)}: {cells}")

print("\nOnly the floor data matter (factor floors and total floor):")
print("  weights (0.3, 0.2, -0.9) and (0.25, 0.05, -0.65) share type <-1; 0,0,-1>")
a = peel_decompose([F(3, 10), F(2, 10), F(-9, 10)], 8)
b = peel_decompose([F(25, 100), F(5, 100), F(-65, 100)], 8)
print("  same inertia lists:", [(e.pos, e.neg) for e in a.entries] == [(e.pos, e.neg) for e in b.entries])
