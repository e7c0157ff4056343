"""Smoke test for the Python bindings.

Build and install first:

    pip install maturin
    maturin develop -m crates/py/Cargo.toml    # or: maturin build + pip install

then run ``python python/smoke_test.py``.
"""

import kntab


def main():
    assert kntab.validate(3, "2,2;3,3;-3") is None
    assert kntab.validate(3, "1;2;-1") is not None

    assert kntab.split(3, "2,2;3,3;-3") == "1,2,2,2;2,3,3,3;-3,-1"
    assert kntab.rectify(3, ".,2;1,3;2,-1") == "2,2;3,3;-3"

    t = "1,3,-1;3,-3;-3"
    for method in ("direct", "sjdt"):
        assert kntab.right_key(3, t, method) == "3,3,-1;-2,-1;-1"
        assert kntab.left_key(3, t, method) == "1,1,2;2,2;-3"

    assert len(kntab.crystal([2, 1], 2)) == 16
    assert len(kntab.crystal([1, 1], 2)) == 5
    chi = kntab.character([2, 1], 2)
    assert sum(chi.values()) == 16
    assert sum(kntab.character([2, 1], 2, [-2, -1]).values()) == 16

    assert len(kntab.cocrystal(4, "1,2,2;2,3;4,4", 3)) == 6
    assert len(kntab.cocrystal_keys(3, t, 3)) == 6

    p, q = kntab.rsk(4, [(1, 2), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 4)])
    assert (p, q) == ("1,2,2;2,3;4,4", "1,2,2;2,3,3;3"), (p, q)

    try:
        kntab.rectify(3, "1,2;x")
    except ValueError as e:
        assert "row 2" in str(e)
    else:
        raise AssertionError("malformed literal accepted")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
