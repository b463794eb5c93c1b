"""Quick check that the extension module imports and agrees with known values."""

import pysubwordlab as sw

a2 = sw.CoxeterSystem("A2")
pentagon = a2.subword_complex([2, 1, 2, 1, 2])
assert pentagon.facets() == [[1, 2], [1, 5], [2, 3], [3, 4], [4, 5]], pentagon.facets()
assert pentagon.f_vector() == [1, 5, 5]
assert pentagon.is_sphere()

a4 = sw.CoxeterSystem("A4")
assert a4.sorting_word([1, 3, 2, 4]) == [1, 3, 2, 4, 1, 3, 2, 4, 1, 3]
assert a4.phi([1, 3, 2, 4]) == [3, 2, 3, 2]
assert a4.theta(1, [1, 3, 2, 4]) == [5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 2, 1, 4, 3]

b2 = sw.CoxeterSystem("B2")
hexagon = b2.multi_cluster_complex(1, [1, 2])
assert hexagon.num_facets == 6
assert hexagon.flip([2, 3], 2) == ([3, 4], 4)
assert b2.almost_positive_labels([1, 2]) == ["-α1", "-α2", "α1", "α1+α2", "α1+2α2", "α2"]
assert b2.recognize([1, 2, 1, 2, 1, 2]) == ([1, 2], 1)

for name, k, count in [("A3", 1, 14), ("B3", 1, 20), ("H3", 1, 32), ("A3", 2, 84)]:
    g = sw.CoxeterSystem(name)
    assert g.multi_cluster_complex(k).num_facets == count, name

try:
    sw.CoxeterSystem("Z3")
except ValueError as e:
    print("rejected:", e)
else:
    raise AssertionError("Z3 accepted")

print("smoke test ok")
