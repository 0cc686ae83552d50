# Mixed rings glue a finite part, a torsion-free algebra part, and a
# divisible torsion part.  The classic obstruction: a non-unital example
# whose finite part meets the closure of the connected component, so the
# ring does not split as finite x connected.
from fractions import Fraction as F

from ringstruct.documents import to_object
from ringstruct.generators import disconnected_example, finite_plus_field
from ringstruct.mixed import finite_connected_split, mixed_multiply, torsion_ideal

disc = to_object(disconnected_example())
print("the glued circle example:", disc)
x = disc.element(1, [], [F(3, 10)])
y = disc.element(1, [], [F(9, 10)])
print("  (1, 0.3) * (1, 0.9) =", mixed_multiply(x, y).as_tuple())

print("  2-torsion ideal:")
for m in torsion_ideal(disc, 2):
    print("   ", m.as_tuple())

print("  unital finite x connected split exists:", finite_connected_split(disc) is not None)

glued = to_object(finite_plus_field(3))
print("\nZ/3 glued to the base field componentwise:", glued)
split = finite_connected_split(glued)
print("  split succeeds with unity", split.unity.as_tuple())
print("  finite ideal order:", split.finite_ideal.order)
print("  connected factor dim:", split.connected_algebra.dim)
a = glued.element(2, [F(1, 2)], [])
b = glued.element(2, [F(4)], [])
print("  componentwise product check:", mixed_multiply(a, b).as_tuple())
