#!/usr/bin/env python3
"""Smoke test for the cosetkit_py extension module.

Builds the cdylib with cargo if needed, loads it, and exercises the main
entry points. Run from anywhere: `python3 python/smoke_test.py`.
"""

import shutil
import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def load_module():
    lib = ROOT / "target" / "release" / "libcosetkit_py.so"
    if not lib.exists():
        subprocess.run(
            ["cargo", "build", "--release", "-p", "cosetkit-py"],
            cwd=ROOT,
            check=True,
        )
    staged = Path(__file__).resolve().parent / "cosetkit_py.so"
    if not staged.exists() or staged.stat().st_mtime < lib.stat().st_mtime:
        shutil.copy2(lib, staged)
    sys.path.insert(0, str(staged.parent))
    import cosetkit_py

    return cosetkit_py


def main():
    ck = load_module()

    klein = ck.Group.from_catalog("elementary_abelian", [2])
    assert klein.size == 4
    assert klein.generators == ["a", "b"]
    assert klein.element("abab") == ""
    assert klein.is_two_acyclic()
    assert klein.girth() == 4
    level, lower_bound = klein.acyclicity_level()
    assert (level, lower_bound) == (3, False)
    print(f"ok group: {klein.name}, order {klein.size}, level {level}")

    assert klein.coset("", ["a"]) == ["", "a"]
    assert klein.same_coset("ab", "ba", [])
    assert klein.gen_set(["", "ab"]) == ["a", "b"]
    assert klein.distance("", "ab") == 2
    path_d, dual_d, consistent = klein.two_distances("", "ab", ["a"])
    assert (path_d, dual_d, consistent) == (2, 1, True)
    print(f"ok cosets and distances: d=2, dual={dual_d}, consistent={consistent}")

    dual = klein.dual()
    assert (dual.vertex_count, dual.edge_count) == (9, 4)
    assert dual.is_n_acyclic(3)
    assert not dual.is_n_acyclic(4)  # the graph has a coset 4-cycle
    closure, contained = klein.convex_closure([("", ["a"]), ("ab", ["a"])], bound=3)
    assert len(closure) == 4 and contained
    print(f"ok dual {dual.vertex_count}/{dual.edge_count}, closure size {len(closure)}")

    triangle = ck.Hypergraph(["x", "y", "z"], [[0, 1], [1, 2], [0, 2]])
    assert not triangle.is_alpha_acyclic()
    filled = ck.Hypergraph(["x", "y", "z"], [[0, 1, 2]])
    assert filled.is_alpha_acyclic()
    round_trip = ck.Hypergraph.from_json(filled.to_json())
    assert round_trip.edge_count == 1
    print("ok hypergraphs: triangle cyclic, filled triangle acyclic")

    d4 = ck.Group.from_catalog("dihedral_reflections", [4])
    fwd = ck.covers(d4, klein)
    assert fwd["compatible"] and fwd["fiber_size"] == 2 and fwd["covering_verified"]
    rev = ck.covers(klein, d4)
    assert not rev["compatible"] and rev["witness_word"] == "abab"
    print(f"ok coverings: fiber {fwd['fiber_size']}, reverse witness {rev['witness_word']}")

    assert "cutchar" in ck.suites() and len(ck.families()) == 5
    report = ck.run_suite("cutchar", budget_nodes=200_000_000)
    assert report["status"] == "verified" and report["cases"] > 0
    print(f"ok suite cutchar: {report['cases']} cases verified")

    s3 = ck.Group.from_catalog("symmetric_transpositions", [3])
    assert not s3.is_two_acyclic()
    try:
        s3.gen_set(["", "t12"])
    except ValueError:
        print("ok guard: non-2-acyclic group rejected where required")
    else:
        raise AssertionError("expected ValueError for a non-2-acyclic group")

    print("smoke test passed")


if __name__ == "__main__":
    main()
