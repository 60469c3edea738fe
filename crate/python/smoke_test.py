"""Smoke test for the _rigidq extension module.

Builds nothing itself: run `cargo build -p rigidq-python` first, then
`python3 python/smoke_test.py` from the repository root.
"""

import shutil
import sys
import tempfile
from pathlib import Path


def load_module():
    root = Path(__file__).resolve().parent.parent
    candidates = [
        root / "target" / "debug" / "lib_rigidq.so",
        root / "target" / "release" / "lib_rigidq.so",
    ]
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit("build the extension first: cargo build -p rigidq-python")
    # Python imports `_rigidq` only under that exact file name.
    stage = Path(tempfile.mkdtemp(prefix="rigidq-"))
    shutil.copy2(built, stage / "_rigidq.so")
    sys.path.insert(0, str(stage))
    import _rigidq

    return _rigidq


def main():
    m = load_module()

    e = m.Engine("A2")
    assert e.n == 2
    assert e.label == "A2"
    assert sorted(e.roots()) == [[0, 1], [1, 0], [1, 1]]

    got = dict((tuple(root), mult) for root, mult in e.decompose([2, 1]))
    assert got == {(1, 0): 1, (1, 1): 1}, got
    assert e.check([2, 1], e.decompose([2, 1])) == (True, True)
    assert e.check([2, 1], [([1, 0], 2), ([0, 1], 1)]) == (True, False)

    assert e.hom([1, 1], [2, 1]) == 2
    assert e.hom([0, 1], [2, 1]) == 1
    assert e.subs([1, 1]) == [[0, 1], [1, 1]]
    assert e.quots([1, 1]) == [[1, 0], [1, 1]]

    d5 = m.Engine("D5")
    assert len(d5.roots()) == 20
    total = [0] * 5
    for root, mult in d5.decompose([2, 3, 4, 2, 2]):
        total = [t + mult * r for t, r in zip(total, root)]
    assert total == [2, 3, 4, 2, 2]

    rows = {(i, j): (target, path) for i, j, target, path in m.type_a_ranks("A3", [1, 2, 1])}
    assert rows[(1, 3)] == (0, 1), rows
    assert rows[(1, 2)] == (1, 1)
    assert rows[(2, 2)] == (2, 2)

    zigzag = {(i, j): (t, p) for i, j, t, p in m.type_a_ranks("A4:><>", [1, 1, 1, 1])}
    assert all(p is None for _, p in zigzag.values()), "two sinks, no path column"

    try:
        e.decompose([1, -1])
    except ValueError:
        pass
    else:
        raise AssertionError("negative entries must raise ValueError")

    print("smoke test ok: engine, decompositions, hom, sub/quot, ranks")


if __name__ == "__main__":
    main()
