"""Smoke test for the pybraidnorm extension.

Build and install next to this file with:

    cargo build --release -p braidnorm-py --features extension-module
    cp target/release/libpybraidnorm.so python/pybraidnorm.so
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import pybraidnorm as bn


def main():
    b = bn.Braid("s1^4", 2)
    assert b.n == 2 and len(b) == 4
    assert b.components == 2
    assert b.linking_matrix() == [[0, 2], [2, 0]]
    assert b.bennequin() == 2
    assert b.relative_bennequin() == [1, 1]

    br = b.bounds([2, 1])
    assert (br.lower, br.upper, br.determined) == (3, 3, True), br

    cable = b.cable([2, 1])
    assert str(cable.braid) == str(bn.Braid("s2 s1^2 s2^2 s1^2 s2 s1^-2", 3))
    assert cable.relative_bennequin == 3

    trefoil = bn.Braid("s1^3", 2)
    h = trefoil.homfly()
    assert h.conway == [(1, 0, 0), (1, 0, 2)]
    assert h.e == 2 and h.mfw_holds
    assert trefoil.homfly(oracle=True).p == h.p

    band = bn.Braid("a1,3^-1", 3)
    assert band.homfly().p == [(1, 6, -2), (-2, 4, -2), (1, 2, -2)]
    assert band.to_standard().generators() == [-1, -2, 1]

    ko_lee = bn.Braid("a4,5^2 a2,4^2 a1,3 a3,4 a2,4 a1,3^2", 5)
    assert ko_lee.bounds([1, 1]).upper == 4
    assert bn.alexander_norm([(2, [0, 0]), (-3, [1, 0]), (2, [2, 0])], [1, 1]) == 2
    assert bn.alexander_norm_text("2 0 0\n-3 1 0\n2 2 0\n", [1, 1]) == 2

    w = bn.Braid.from_generators(3, [1, -2, 1])
    assert w.is_homogeneous
    assert (w * w.inverse()).bennequin() == -3

    try:
        bn.Braid("s3", 3)
    except ValueError:
        pass
    else:
        raise AssertionError("out-of-range generator accepted")

    try:
        b.bounds([1, -1])
    except ValueError:
        pass
    else:
        raise AssertionError("negative class accepted")

    try:
        bn.Braid("s1^-3 s2^-3 s1^-2 s2 s1", 3).homfly(oracle=True, budget=3)
    except bn.BudgetExceeded:
        pass
    else:
        raise AssertionError("budget not enforced")

    print("pybraidnorm smoke test passed")


if __name__ == "__main__":
    main()
