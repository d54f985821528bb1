# The bounded-universe verification harness.
#
# Each suite turns one constructive argument into an exhaustive membership
# check over a finite slice of the monoid.  A counterexample on the slice
# would refute the containment outright; zero counterexamples at the stated
# bounds is the acceptance condition.

import json

from waning import (
    CONST_ZERO,
    PBij,
    UBasic,
    enumerate_universe,
    product_containment_check,
    run_suite,
    subset_check,
    universe_size,
)

# --- the universes -------------------------------------------------------------

for bound in range(6):
    print(f"universe bound {bound}: {universe_size(bound)} partial bijections")
print("first elements of the bound-3 universe:",
      [p.pairs for p in enumerate_universe(3)[:5]])

# --- a direct subset check -------------------------------------------------------

# shrinking the avoided set enlarges the basic set, so this direction holds...
rep = subset_check(UBasic(CONST_ZERO, 1, {0}), UBasic(CONST_ZERO, 1, set()), 3)
print("\n", rep.summary())
# ...and the converse fails, with the offending elements listed
rep = subset_check(UBasic(CONST_ZERO, 1, set()), UBasic(CONST_ZERO, 1, {0}), 3)
print(" ", rep.summary())
for inputs, witness in rep.counterexamples[:3]:
    print("   counterexample:", witness)

# --- continuity of multiplication, exhaustively -----------------------------------

rep = product_containment_check(CONST_ZERO, PBij([(0, 1)]), PBij([(1, 2)]), 4)
print("\n", rep.summary())

# --- the named suites --------------------------------------------------------------

for name in ("census", "chains", "remark", "order", "compactness"):
    rep = run_suite(name)
    print(rep.summary())

# machine-readable form of the last report
print("\nreport document:")
print(json.dumps(rep.to_obj(), indent=2))
