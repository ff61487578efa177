"""Difference sets: search, development, and nonexistence.

A (v,k,2) difference set in a group of order v develops into a transitive
biplane. The exhaustive search finds every difference set in the named
order-16 groups; the witness scan proves none can exist for (121,16,2).
"""

from biplane import diffset
from biplane.aut import canonical_form
from biplane.design import DesignParams

for tag in ("c2xc8", "q8xc2", "c16"):
    group = diffset.from_tag(tag)
    found = diffset.search_difference_sets(group, 6, 2)
    print(f"{group.name}: {len(found)} translation class(es)")
    designs = {canonical_form(diffset.develop(ds)).digest[:12] for ds in found}
    if designs:
        print(f"   developments fall into {len(designs)} isomorphism class(es): {sorted(designs)}")

print("\nThe cyclic group of order 16 admits none; the other two groups each")
print("act regularly on two of the three (16,6,2) biplanes.")

print("\nDeveloping the quadratic residues mod 11:")
ds = diffset.DifferenceSet(group=diffset.cyclic(11), elements=(1, 3, 4, 5, 9), lam=2)
d = diffset.develop(ds)
print(f"  gives a ({d.v},{d.k},{d.lam}) biplane; first block {d.blocks[0]}")

print("\nWhy no transitive (121,16,2) biplane can exist:")
witness = diffset.lander_excluded(DesignParams(121, 16, 2))
print(f"  witness (pdiv, q, j) = {tuple(witness)}: "
      f"{witness.q}^{witness.j} = -1 (mod {witness.pdiv}), yet {witness.q} divides")
print("  the square-free part of k - lambda = 14, so no difference set exists;")
print("  a transitive example would have to be a development, contradiction.")
