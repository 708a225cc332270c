"""Compare the two vertex orders used to evaluate the ordered cup product.

    python scripts/vertex_order.py

The front/back-face cup product only commutes with pullback along maps that
preserve vertex order.  Ordering source vertices by (label, id) makes the
labeling order-preserving; ordering by raw id does not, and the result then
depends on the choice of target facet.  This prints H for every oriented
target facet under both orders on a null-homotopic map (three labels only)
and on a few sampled maps of known degree.
"""

from simphopf import HopfOptions, compute_hopf
from simphopf.engine import oriented_facet_choices
from simphopf.fixtures import cyclic_polygon, join, sampled_hopf_map
from simphopf.pullback import Labeling, validate_labeling


def values(c, lab, order):
    return sorted({
        compute_hopf(c, lab, HopfOptions(sigma_bar=sb, vertex_order=order)).hopf
        for sb in oriented_facet_choices(2)
    })


def main():
    cases = [
        ("C6*C6, labels 1-3 only", join(cyclic_polygon(6), cyclic_polygon(6)),
         Labeling((1, 1, 1, 3, 3, 2, 3, 1, 3, 1, 1, 2))),
    ]
    for p, twist in ((4, 1), (6, 1), (4, -1), (6, 2)):
        # coarse samples are not always valid labelings; take the first that is
        for seed in range(50):
            c, lab = sampled_hopf_map(p, p, seed=seed, twist=twist)
            if validate_labeling(c, lab, 2).valid:
                cases.append((f"sampled on sd(C{p}*C{p}), degree {twist}, seed {seed}", c, lab))
                break
    for name, c, lab in cases:
        print(f"{name}: label order {values(c, lab, 'label')}, id order {values(c, lab, 'index')}")


if __name__ == "__main__":
    main()
