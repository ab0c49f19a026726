import json
from fractions import Fraction

from hypothesis import given, strategies as st

from hecke_fusion import serialize as ser
from hecke_fusion.combinat import StandardTableau
from hecke_fusion.exact import GenericScalar, RatFun


@given(st.fractions())
def test_fraction_round_trip(x):
    s = ser.frac_str(x)
    assert "/" in s and "." not in s
    assert ser.parse_frac(s) == x


def test_integers_keep_denominator():
    assert ser.frac_str(3) == "3/1"
    assert ser.frac_str(Fraction(-2, 4)) == "-1/2"


def test_generic_scalar_encoding():
    q1, q2 = GenericScalar.variables(2)
    x = (q1 + 3) / (2 * (1 + q1 - q2) * (1 + q1 - q2))
    enc = ser.scalar(x)
    assert enc == {"num": "q1 + 3", "den": [[1, 1, 2], [1, 1, 2]], "const": "2/1"}
    json.dumps(enc)


def test_ratfun_encoding():
    z = RatFun.z()
    assert ser.scalar((z - 2) / (z - 1)) == {"num": ["-2/1", "1/1"], "den": ["-1/1", "1/1"]}


def test_tableau_encoding():
    t = StandardTableau.from_rows([[[1, 3]], [[2]]])
    assert ser.tableau(t) == [[[1, 3]], [[2]]]
    assert ser.shape(t.shape) == [[2], [1]]
