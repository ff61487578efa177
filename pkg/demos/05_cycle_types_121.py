"""What an automorphism of a (121,16,2) biplane could look like.

No such biplane is known. If one exists, the only possible prime-power
element orders and cycle types are the ones below, and the group order
divides 2^7 * 3^2 * 5 * 7 * 11 * 13 = 5765760.
"""

from biplane.fixcert import admissible_cycle_types_121, sylow_bounds_121

print("Admissible cycle types on 121 points, by element order:\n")
for order in (2, 4, 8, 16, 3, 9, 5, 25, 7, 49, 11, 121, 13, 169, 17):
    types = admissible_cycle_types_121(order)
    shown = ", ".join(str(t) for t in types) if types else "impossible"
    print(f"  order {order:>3}: {shown}")

print("\nSquaring consistency: the square of each order-4 type is an")
print("order-2 type, and the square of the order-8 type is an order-4 type.")
for order in (4, 8):
    lower = set(admissible_cycle_types_121(order // 2))
    assert all(t.power(2) in lower for t in admissible_cycle_types_121(order))
print("checked.")

print("\nSylow bounds and the order divisor:")
product = 1
for p, (bound, structure) in sorted(sylow_bounds_121().items()):
    product *= bound
    print(f"  p = {p:>2}: at most {bound} ({structure})")
print(f"  product = {product} = 2^7 * 3^2 * 5 * 7 * 11 * 13")
