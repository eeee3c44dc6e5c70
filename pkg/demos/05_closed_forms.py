"""Near-constant binary multisets: closed forms against the general engine."""

from projforce import Status, decide, field_new
from projforce.oracle import ab_characterization, ab_multiset, abc_characterization, abc_multiset

f = field_new(2)
k = 3
mismatches = 0
for a in range(9):
    for b in range(9):
        realizable, forcing = ab_characterization(k, a, b)
        v = decide(f, k, ab_multiset(k, a, b), use_split_difference=False)
        mismatches += (v.status is not Status.FORCING_VACUOUS) != realizable
        mismatches += realizable and v.is_forcing != forcing
        for c in range(9):
            realizable, forcing = abc_characterization(k, a, b, c)
            v = decide(f, k, abc_multiset(k, a, b, c), use_split_difference=False)
            mismatches += (v.status is not Status.FORCING_VACUOUS) != realizable
            mismatches += realizable and v.is_forcing != forcing
print("mismatches:", mismatches)
