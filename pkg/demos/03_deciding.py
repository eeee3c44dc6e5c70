"""Deciding projection-forcing: split difference first, search when needed."""

from projforce import decide, field_new, integral_differences, split_difference

f = field_new(2)

for s in [(3, 3, 3, 4, 4, 4, 7), (2, 2, 2, 3, 5, 5, 5), (2, 2, 2, 2, 4, 4, 4), (1, 1, 1, 1, 1, 1, 1)]:
    v = decide(f, 3, s)
    print(s, "delta", split_difference(f, 3, s), "->", v.status.value, v.reason.value, v.stats.to_dict())

# The only integral difference vectors for {2,2,2,3,5,5,5} are rearrangements of one vector
print({tuple(sorted(dv.d)) for dv in integral_differences(f, 3, (2, 2, 2, 3, 5, 5, 5))})

# A negative answer comes with an explicit non-projection map
w = decide(f, 3, (2, 2, 2, 2, 4, 4, 4)).witness
print("witness verifies:", w.verify())
print("B =", w.map.domain.rows)
print("C =", w.map.image)
