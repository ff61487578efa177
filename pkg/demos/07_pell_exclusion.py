"""The Diophantine side of the symplectic exclusion.

Degrees v = c^2 with c = q^2(q^2-1)/2 cannot carry a biplane: the forced
block size requires 8c^2 - 7 to be a perfect square, i.e. c must appear
among the x-solutions of 8x^2 - y^2 = 7 -- but those are = +-1 (mod 3)
while 3 always divides c.
"""

from biplane.cartdecomp import pell_brute_force, pell_solutions, psp4_degree_excluded

print("Solutions of 8x^2 - y^2 = 7 (two families from one recurrence):")
print(f"{'x':>8} {'y':>8}   n  family")
for s in pell_solutions(4):
    print(f"{s.x:>8} {s.y:>8}  {s.n:>2}  {s.family:>4}")

limit = 10**5
rec = sorted((s.x, s.y) for s in pell_solutions(12) if s.x <= limit)
assert rec == pell_brute_force(limit)
print(f"\nthe recurrence is complete: brute force over x <= {limit} finds")
print(f"exactly the same {len(rec)} solutions")

mods = {s.x % 3 for s in pell_solutions(30)}
print(f"\nresidues of x modulo 3: {sorted(mods)} (never 0)")

print("\nExclusion reports for the even symplectic field sizes:")
for q in (4, 8, 16, 32):
    r = psp4_degree_excluded(q)
    print(f"  q={q:>2}: c={r.c:>7}, 8c^2-7 is "
          f"{'a square' if r.pell_value_is_square else 'not a square'}, "
          f"c mod 3 = {r.c_mod_3}  -> excluded={r.excluded}")

small = psp4_degree_excluded(4).small_branches
print("\nThe two sporadic grid sizes fail on arithmetic alone:")
for c, info in small.items():
    print(f"  c={c}: forced k={info['k']} gives v={info['v']}, "
          f"but the degree would be {info['forbidden_degree']}")
