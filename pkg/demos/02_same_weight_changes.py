"""Two maps with the same weight changes, only one of them a projection."""

from projforce import (
    GeneratorMatrix,
    LinearMapSpec,
    field_new,
    is_projection,
    multiplicities,
    weight_changes,
)

f = field_new(2)
v1 = GeneratorMatrix(f, ((1, 1, 1, 1, 0, 0, 0), (1, 1, 0, 0, 1, 1, 0), (1, 0, 1, 0, 1, 0, 1)))
v2 = GeneratorMatrix(f, ((1, 1, 1, 1, 0, 0, 0), (1, 1, 1, 0, 1, 0, 0), (1, 1, 0, 0, 0, 1, 1)))

# phi1 copies the first coordinate twice; phi2 keeps the first two coordinates
phi1 = LinearMapSpec(v1, tuple((r[0], r[0]) for r in v1.rows))
phi2 = LinearMapSpec(v2, tuple(r[:2] for r in v2.rows))

for name, phi in (("phi1", phi1), ("phi2", phi2)):
    r = multiplicities(f, phi.domain.rows).counts
    q = multiplicities(f, phi.image).counts
    print(name, "changes", weight_changes(phi), "projection", is_projection(phi))
    print("    R =", r)
    print("    Q =", q)
