"""Smoke test for the `hexid` extension module.

Build and install the wheel first:

    maturin build --release -m crates/py/Cargo.toml -o dist
    pip install dist/hexid-*.whl

then run `python python/smoke_test.py`.
"""

from fractions import Fraction

import hexid


def main():
    assert hexid.neighbors((0, 0)) == [(-1, 0), (1, 0), (0, 1)]
    assert hexid.neighbors((1, 0)) == [(0, 0), (2, 0), (1, -1)]
    assert hexid.distance((1, 0), (1, 3)) == 7
    assert hexid.bfs_distance((1, 0), (1, 3)) == 7
    assert hexid.l1_distance((0, 0), (3, -2)) == 5
    assert hexid.line_distance((0, 0), 2) == 3
    assert len(hexid.ball((0, 0), 2)) == 10
    for x in range(-6, 7):
        for y in range(-6, 7):
            assert hexid.distance((0, 1), (x, y)) == hexid.bfs_distance((0, 1), (x, y))

    code = hexid.Code(6)
    assert repr(code) == "Code(r=6)"
    assert code.periods == (18, 14)
    assert code.is_codeword((0, 0)) and code.is_codeword((6, 0))
    assert not code.is_codeword((1, 0)) and not code.is_codeword((0, 1))
    words = code.codewords_in_window(0, 17, 0, 13)
    assert len(words) == 33
    assert all(code.is_codeword(w) for w in words)

    report = code.verify()
    assert report.valid and report.confusion_count == 0
    assert report.vertices_checked == 18 * 14
    broken = code.verify(drop_separator=True)
    assert not broken.valid and broken.confusion_pairs
    assert code.check_claim9() and code.check_nearby_uniqueness()

    exact = code.density_exact()
    assert isinstance(exact, Fraction) and exact == Fraction(11, 84)
    assert sum(code.density_components()) == exact
    assert hexid.density_theorem(16) == Fraction(83, 1632)
    assert abs(code.density_empirical(252) - exact) <= Fraction(10, 252)
    assert hexid.density_row(16) == "16\t83/1632\t0.0509\tyes\t"

    try:
        hexid.Code(0)
    except ValueError:
        pass
    else:
        raise AssertionError("Code(0) accepted")

    print("smoke test ok:", report)


if __name__ == "__main__":
    main()
