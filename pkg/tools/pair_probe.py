"""One-off probe: time the isomorphism search on named catalog pairs."""
import json
import sys
import time

sys.path.insert(0, "/root/pkg/tools")
sys.path.insert(0, "/root/pkg/src")

import build_catalog as bc
from pgroups.core import FiniteGroup
from pgroups.realizations import PermRealization


def load(name, path="/root/pkg/src/pgroups/data/catalog_3.jsonl"):
    with open(path) as fh:
        for line in fh:
            row = json.loads(line)
            if row["name"] == name:
                gens = [tuple(g) for g in row["generators"]]
                G = FiniteGroup(PermRealization(row["degree"]), gens, row["p"])
                return bc.Entry(row["name"], "probe", G, gens, row["degree"])
    raise SystemExit(f"{name} not in catalog")


PAIRS = [
    ("sd_c9xc3_9_4", "sd_c9xc3_9_5"),
    ("sd_c9xc3xc3_3_2", "mod27xc3xc3"),
    ("sd_c9xc9_3_11", "sd_c9xc9_3_12"),
]

cache = {}
for an, bn in PAIRS:
    a = cache.setdefault(an, load(an))
    b = cache.setdefault(bn, load(bn))
    t0 = time.time()
    verdict = bc.isomorphic(a, b)
    dt = time.time() - t0
    print(f"{an} vs {bn}: iso={verdict}  ({dt:.2f}s)", flush=True)
