"""Regenerate the fixture corpus shipped in src/oriented_pursuit/corpus/.

Usage: python scripts/build_corpus.py [OUTDIR]
"""
import json
import sys
from pathlib import Path

from oriented_pursuit import generators as gen
from oriented_pursuit.generators import Family, GeneratorSpec
from oriented_pursuit.graph import is_connected
from oriented_pursuit.io import save
from oriented_pursuit.retracts import find_distributed_retract, find_strong_retract

OUT = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).parents[1] / "src/oriented_pursuit/corpus"

NAMED = {
    "k2": gen.complete(2),
    "p3": gen.path(3),
    "p4": gen.path(4),
    "k3": gen.complete(3),
    "c4": gen.cycle(4),
    "c5": gen.cycle(5),
    "c6": gen.cycle(6),
    "paw": gen.paw(),
    "k1_4": gen.star(4),
    "dc3": gen.directed_cycle(3),
    "dc4": gen.directed_cycle(4),
    "arc": gen.directed_path(2),
    "dp3": gen.directed_path(3),
    "tt3": gen.transitive_triangle(),
}


def seeded(family, n_values, count, accept, base=None, p=0.5):
    found, seed = [], 0
    while len(found) < count:
        n = n_values[seed % len(n_values)]
        of = GeneratorSpec(base, n, seed, p) if base else None
        spec = GeneratorSpec(family, n, seed, p, of)
        g = gen.generate(spec)
        if accept(g):
            found.append((spec, g))
        seed += 1
    return found


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    entries = []

    def add(name, g, group, spec=None):
        save(g, OUT / f"{name}.json")
        entry = {"file": f"{name}.json", "group": group, "sha256": gen.sha256_of(g)}
        if spec is not None:
            entry["spec"] = spec.to_dict()
        entries.append(entry)

    for name, g in NAMED.items():
        add(name, g, "named")
    for i, (spec, g) in enumerate(seeded(Family.RANDOM_TREE, [6, 7, 8], 10, lambda g: True)):
        add(f"tree_{i:02d}", g, "random", spec)
    for i, (spec, g) in enumerate(seeded(Family.RANDOM_BIPARTITE, [5, 6, 7, 8], 10, is_connected)):
        add(f"bipartite_{i:02d}", g, "random", spec)
    for i, (spec, g) in enumerate(seeded(Family.RANDOM_ORIENTATION, [5, 6, 7, 8], 10, is_connected,
                                         base=Family.RANDOM_GRAPH)):
        add(f"orientation_{i:02d}", g, "random", spec)
    strong = seeded(Family.RANDOM_ORIENTATION, [5, 6, 7], 25,
                    lambda g: is_connected(g) and find_strong_retract(g) is not None,
                    base=Family.RANDOM_GRAPH, p=0.6)
    distributed = seeded(Family.RANDOM_ORIENTATION, [5, 6, 7], 25,
                         lambda g: is_connected(g) and find_distributed_retract(g) is not None
                         and find_strong_retract(g) is None,
                         base=Family.RANDOM_GRAPH, p=0.5)
    for i, (spec, g) in enumerate(strong + distributed):
        add(f"retract_{i:02d}", g, "retract", spec)

    manifest = {
        "version": 1,
        "enumerations": {"undirected_max_n": 6, "tree_max_n": 5, "oriented_max_n": 4},
        "entries": entries,
    }
    (OUT / "manifest.json").write_text(json.dumps(manifest, indent=1) + "\n", encoding="utf-8")
    print(f"wrote {len(entries)} fixtures to {OUT}")


if __name__ == "__main__":
    main()
