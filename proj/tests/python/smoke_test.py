"""Smoke tests for the siegeldim extension module."""
from fractions import Fraction

import siegeldim as sd


def test_dimensions():
    assert sd.dim(10, 0, 6, 1) == 15
    assert sd.dim(5, 2, 3, 2) == 1
    assert sd.dim(15, 8, 1, 15) == 1004
    assert sd.dim(1, 0, 6, 1) == -1  # formal column
    assert sd.dim(7, 3, 6, 1) == 0  # odd j


def test_result_dict():
    r = sd.dim_cusp_forms(5, 0, 6, 1)
    assert r["dimension"] == 0
    assert r["validity"] == "proven"
    b = r["breakdown"]
    assert b["h1"] == Fraction(35, 72)
    assert b["h7"] == Fraction(43, 36)
    assert b["i2"] == Fraction(-1, 4)
    assert b["total"] == 0
    assert sum(b[f"h{t}"] for t in range(1, 13)) + \
        sum(b[f"i{t}"] for t in range(1, 4)) == b["total"]

    formal = sd.dim_cusp_forms(1, 0, 6, 1)
    assert formal["validity"] == "formal"
    odd = sd.dim_cusp_forms(7, 3, 6, 1)
    assert odd["dimension"] == 0 and "breakdown" not in odd


def test_level():
    lvl = sd.Level(6, 1)
    assert lvl.discriminant == 6
    assert lvl.primes == [2, 3]
    assert repr(lvl) == "Level(6, 1)"
    for bad in [(4, 3), (2, 1), (1, 1), (6, 2)]:
        try:
            sd.Level(*bad)
        except ValueError:
            pass
        else:
            raise AssertionError(f"Level{bad} should be invalid")


def test_primitives():
    assert sd.splitting_symbol("gaussian", 5) == 1
    assert sd.splitting_symbol("gaussian", 2) == 0
    assert sd.splitting_symbol("eisenstein", 2) == -1
    assert sd.legendre_symbol(3, 5) == -1
    assert sd.bracket_eval([0, -1, 1], 5) == 1


def test_oracle_and_verification():
    assert sd.intro_dim(5, 3) == 2
    assert sd.intro_dim(15, 3) == 13
    assert sd.intro_dim(5, 5) == 3
    assert sd.verify_golden() == 0
    assert sd.crosscheck_oracle(29, 20) == 0


def test_render_table():
    csv = sd.render_table(1, 15, 5, 5, 0, 0, "csv")
    assert csv == "d1,d2,k,j,dim,validity\n1,15,5,0,4,proven\n"
    latex = sd.render_table(6, 1, 0, 15, 0, 8, "latex")
    assert "$j\\backslash k$" in latex


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"ok: {test.__name__}")
    print(f"python smoke: {len(tests)} tests passed")


if __name__ == "__main__":
    main()
