import json

import pytest
from hypothesis import given

from matroid_ring import (
    RandomMatroidSpec,
    is_nested,
    parse_matroid,
    random_matroid,
    read_matroids,
    serialize_matroid,
    uniform,
)
from matroid_ring.errors import ExchangeAxiomViolation, InfeasibleSpec, ParseError, ValidationError
from matroid_ring.generators import all_matroids, random_matroids as gen

from conftest import random_matroids

U23 = '{"format":"matroid/v1","n":3,"bases":[[1,2],[1,3],[2,3]]}'
EIGHT = json.dumps({"format": "matroid/v1", "n": 8, "cyclic_flats": [
    [[], 0], [[1, 2], 1], [[3, 4], 1], [[1, 2, 3, 4], 2],
    [[1, 2, 3, 4, 5, 6], 3], [[1, 2, 3, 4, 7, 8], 3], [[1, 2, 3, 4, 5, 6, 7, 8], 4]]})


def test_parse_and_serialize(m8):
    assert parse_matroid(U23) == uniform(2, 3)
    assert serialize_matroid(uniform(2, 3)) == U23
    M = parse_matroid(EIGHT)
    assert M == m8 and M.rank() == 4


@pytest.mark.parametrize("line", [
    '{"format":"matroid/v1","n":3,"bases":[[1]],"cyclic_flats":[]}',
    '{"format":"matroid/v1","n":3}',
    '{"format":"matroid/v2","n":3,"bases":[[1]]}',
    '{"format":"matroid/v1","n":3,"bases":[[4]]}',
    '{"format":"matroid/v1","n":0,"bases":[[]]}',
    '{"format":"matroid/v1","n":3,"bases":[[1]],"extra":1}',
    '{"format":"matroid/v1","n":3,"cyclic_flats":[[1,2]]}',
    '[1,2]',
    '{"format":',
])
def test_parse_errors(line):
    with pytest.raises(ParseError):
        parse_matroid(line)


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        parse_matroid('{"format": oops}')
    assert info.value.position == 11 and "position 11" in str(info.value)


def test_axiom_errors_forwarded():
    with pytest.raises(ExchangeAxiomViolation):
        parse_matroid('{"format":"matroid/v1","n":4,"bases":[[1,2],[3,4]]}')
    with pytest.raises(ValidationError):
        parse_matroid('{"format":"matroid/v1","n":3,"cyclic_flats":[[[],0],[[1,2],2]]}')


def test_read_matroids_reports_line():
    with pytest.raises(ParseError, match="line 3"):
        list(read_matroids([U23, "", "{bad"]))


@given(random_matroids(max_n=9))
def test_roundtrip(M):
    line = serialize_matroid(M)
    assert parse_matroid(line) == M
    assert serialize_matroid(parse_matroid(line)) == line


def test_roundtrip_many():
    for M in gen(6, 1000, 3):
        assert parse_matroid(serialize_matroid(M)) == M


def test_generator_examples():
    M = random_matroid(RandomMatroidSpec("chain-product", 8, 5, 1))
    assert M.rank() == 5 and M.is_loopfree() and is_nested(M)
    M = random_matroid(RandomMatroidSpec("uniform-minor", 4, 2, 0))
    assert M.rank() == 2 and M.is_loopfree()
    for kind in ("transversal", "chain-product", "graphic", "uniform-minor"):
        spec = RandomMatroidSpec(kind, 7, 3, 12345)
        a, b = random_matroid(spec), random_matroid(spec)
        assert a == b and serialize_matroid(a) == serialize_matroid(b)
        assert a.is_loopfree() and a.rank() == 3


def test_generator_infeasible():
    with pytest.raises(InfeasibleSpec):
        random_matroid(RandomMatroidSpec("graphic", 9, 6, 0))
    with pytest.raises(InfeasibleSpec):
        random_matroid(RandomMatroidSpec("transversal", 4, 0, 0))
    with pytest.raises(InfeasibleSpec):
        random_matroid(RandomMatroidSpec("matching", 4, 2, 0))


def test_exhaustive_counts():
    assert [len(all_matroids(n)) for n in range(1, 6)] == [2, 5, 16, 68, 406]
    with pytest.raises(InfeasibleSpec):
        all_matroids(6)
