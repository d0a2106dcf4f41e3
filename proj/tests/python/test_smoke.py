import json
import math

import pytest

try:
    import deszeta as dz
except ImportError:
    import _deszeta as dz


def test_exact_values():
    assert dz.value([0]) == "-1/2"
    assert dz.value([1]) == "-1/6"
    assert dz.value([2]) == "0"
    assert dz.value([0, 0]) == "1/4"
    assert dz.value([1, 2, 1]) == dz.value_gf([1, 2, 1])


def test_coeff_table():
    t1 = dz.coeff_table(1)
    assert sorted(t1) == [([0], [0], "1"), ([1], [0], "-1")]
    t2 = dz.coeff_table(2)
    assert len(t2) == 7
    assert all(sum(m) == 0 for _, m, _ in t2)


def test_evaluate_depth1():
    value, err = dz.evaluate([3.0])
    # (1 - 3) * zeta(3)
    assert abs(value - (-2.4041138063191886)) < 1e-12
    assert err < 1e-10


def test_evaluate_mixed():
    value, err = dz.evaluate_mixed([4.0], 0)
    assert abs(value - 1.5 * (math.pi**4 / 90)) < 1e-6


def test_euler_zagier():
    value, _ = dz.euler_zagier([2.0])
    assert abs(value - math.pi**2 / 6) < 1e-12
    nested, err = dz.euler_zagier([2.0, 3.0])
    assert abs(nested - 0.22881039760335376) < 10 * err + 1e-12


def test_hurwitz():
    value, _ = dz.hurwitz_zeta(2.0, 1.0)
    assert abs(value - math.pi**2 / 6) < 1e-12


def test_errors():
    with pytest.raises(dz.DeszetaError):
        dz.evaluate([0.5])
    with pytest.raises(dz.DeszetaError):
        dz.verify("no-such-suite")


def test_verify_suite():
    reports = json.loads(dz.verify("inversion"))
    assert len(reports) == 100
    assert all(r["verdict"] == "pass" for r in reports)
    assert all(r["residual"] == "0" for r in reports)
