# The lattice of labelled topologies: comparison, joins, poset embedding,
# and Hasse-diagram export.

from waning import (
    CONST_OMEGA,
    CONST_ZERO,
    FinitePoset,
    PolishTopology,
    WaningFn,
    compare,
    descending_chain_element,
    embed_poset,
    hasse_dot,
    join_topology,
    preceq,
)

# --- comparing topologies --------------------------------------------------------

bottom_direct = PolishTopology(CONST_OMEGA)
bottom_dual = PolishTopology(CONST_OMEGA, dual=True)
top = PolishTopology(CONST_ZERO)

print("direct bottom vs dual bottom:", compare(bottom_direct, bottom_dual).value)
print("direct bottom vs top:", compare(bottom_direct, top).value)
print("join of the two bottoms:", join_topology(bottom_direct, bottom_dual))

t1 = PolishTopology(WaningFn(drops=(5, 1)))
t2 = PolishTopology(WaningFn(drops=(3, 2, 1)))
print("\nincomparable pair:", compare(t1, t2).value)
print("their join:", join_topology(t1, t2))

# --- embedding finite posets -------------------------------------------------------

# the four-element diamond: bottom, two middles, top
diamond = FinitePoset(
    ["bot", "l", "r", "top"],
    [
        ("bot", "bot"), ("l", "l"), ("r", "r"), ("top", "top"),
        ("bot", "l"), ("bot", "r"), ("bot", "top"),
        ("l", "top"), ("r", "top"),
    ],
)
mapping = embed_poset(diamond)
for label, fn in mapping.items():
    print(f"{label:>4} ->", fn)
print("order preserved:",
      all(diamond.le(x, y) == preceq(mapping[x], mapping[y])
          for x in diamond.elements for y in diamond.elements))

# --- Hasse diagrams -----------------------------------------------------------------

chain = [descending_chain_element(n) for n in range(4)]
print("\nDOT export of a four-element chain:")
print(hasse_dot(chain))
print("DOT export of the embedded diamond:")
print(hasse_dot(mapping.values()))
