"""Shrink a sampled Hopf map to a small simplicial model.

Starts from ``sampled_hopf_map(4, 4, rounds=1, seed)`` (80 vertices) and
repeatedly contracts edges whose endpoints share a label and satisfy the link
condition.  Such a contraction is a degree +-1 map of spheres followed by the
same labeling, so |H| is unchanged.  When stuck, a vertex is relabeled to a
contiguous label (the old and new maps agree up to contiguity) if that frees a
contraction.  The best result over several shuffles is printed as Python data.

    python scripts/find_hopf_fixture.py --trials 12
"""

import argparse
import random
from itertools import combinations

from simphopf import build_complex, compute_hopf, validate_labeling
from simphopf.fixtures import sampled_hopf_map
from simphopf.pullback import Labeling


def link(facets, simplex):
    simplex = set(simplex)
    out = set()
    for f in facets:
        if simplex <= set(f):
            rest = tuple(sorted(set(f) - simplex))
            for k in range(1, len(rest) + 1):
                out.update(combinations(rest, k))
    return out


def contract(facets, u, v):
    if link(facets, (u,)) & link(facets, (v,)) != link(facets, (u, v)):
        return None
    new = []
    for f in facets:
        if u in f and v in f:
            continue
        if v in f:
            f = tuple(sorted(u if x == v else x for x in f))
        new.append(f)
    if len(set(new)) != len(new):
        return None
    return new


def shrink(facets, labels, rng, max_relabel=30):
    while True:
        edges = sorted({e for f in facets for e in combinations(f, 2)})
        rng.shuffle(edges)
        for u, v in edges:
            if labels[u] == labels[v]:
                new = contract(facets, u, v)
                if new is not None:
                    facets = new
                    break
        else:
            moves = []
            for w in sorted({x for f in facets for x in f}):
                star = [f for f in facets if w in f]
                for lab in (1, 2, 3, 4):
                    if lab != labels[w] and all(len({labels[x] for x in f} | {lab}) < 4 for f in star):
                        moves.append((w, lab))
            rng.shuffle(moves)
            for w, lab in moves[:max_relabel]:
                old, labels[w] = labels[w], lab
                partners = sorted({x for f in facets if w in f for x in f if x != w and labels[x] == lab})
                new = None
                for x in partners:
                    new = contract(facets, min(w, x), max(w, x))
                    if new is not None:
                        break
                if new is not None:
                    facets = new
                    break
                labels[w] = old
            else:
                return facets, labels


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=12)
    ap.add_argument("--seed", type=int, default=0, help="rotation seed of the sampled map")
    args = ap.parse_args()

    c, lab = sampled_hopf_map(4, 4, rounds=1, seed=args.seed)
    print(f"start: f_vector={c.f_vector} H={compute_hopf(c, lab).hopf}")
    best = None
    for trial in range(args.trials):
        facets, labels = shrink(list(c.facets), dict(enumerate(lab.labels)), random.Random(trial))
        small = build_complex(facets)
        small_lab = Labeling.from_mapping(small, labels)
        assert validate_labeling(small, small_lab, 2).valid
        h = compute_hopf(small, small_lab).hopf
        print(f"trial {trial}: f_vector={small.f_vector} H={h}")
        key = (small.n_vertices, small.f_vector[-1])
        if best is None or key < best[0]:
            best = (key, small, small_lab, h)
    _, small, small_lab, h = best
    print(f"best: f_vector={small.f_vector} H={h}")
    print("HOPF_FACETS =", small.facets)
    print("HOPF_LABELS =", small_lab.labels)


if __name__ == "__main__":
    main()
