"""All multisets of 7 weight changes in 1..7 for binary 3-dimensional codes."""

from projforce import SurveySpec, survey

report = survey(SurveySpec(q=2, k=3, min_entry=1, max_entry=7))
print("enumerated", report.total_enumerated, report.counts)
print("projection-forcing:", len(report.forcing))
print("not certified by the split difference:")
for s in report.forcing_beyond_split:
    print("   ", s)

# Allowing 0 as an entry changes the numbers
wider = survey(SurveySpec(q=2, k=3, min_entry=0, max_entry=7))
print("with entries 0..7:", len(wider.forcing), "forcing,", len(wider.forcing_beyond_split), "beyond split")
