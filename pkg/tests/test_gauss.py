import json
import random

import pytest

from vkt.gauss import (
    GaussCode,
    GaussEntry,
    ParseError,
    Parity,
    UnknownCrossingError,
    ValidationError,
    canonical_form,
    is_odd_virtual,
    odd_writhe,
    parity,
    parse_gauss,
    validate,
    writhe,
)
from vkt.fixtures import load_fixture
from vkt.labeling import increment
from vkt.transform import mirror

from conftest import random_code


class TestParse:
    def test_six_entry_code(self):
        code = parse_gauss("O1+U2+O3-U1+O2+U3-")
        assert len(code) == 6
        assert set(code.crossings()) == {"1", "2", "3"}
        assert {code.sign_of(c) for c in code.crossings()} == {1, -1}
        assert code.entries[0] == GaussEntry("1", "O", 1)
        assert code.entries[2] == GaussEntry("3", "O", -1)

    def test_empty_input_is_unknot(self):
        assert parse_gauss("") == GaussCode()
        assert parse_gauss("   ") == GaussCode()

    def test_whitespace_and_case_tolerance(self):
        code = parse_gauss("O1+ u1+")
        assert len(code) == 2
        assert code.entries[1] == GaussEntry("1", "U", 1)
        assert parse_gauss("o1+,U1+") == parse_gauss("O1+U1+")

    def test_multichar_labels_maximal_munch(self):
        code = parse_gauss("Oab1+Uab1+")
        assert code.crossings() == ("ab1",)

    def test_lexical_error_carries_position(self):
        with pytest.raises(ParseError) as err:
            parse_gauss("O1+*U1+")
        assert err.value.position == 3

    def test_missing_sign_rejected(self):
        with pytest.raises(ParseError):
            parse_gauss("O1")

    def test_text_round_trip(self):
        text = "O1+U2+O3-U1+O2+U3-"
        assert parse_gauss(text).text == text

    def test_json_round_trip(self):
        code = parse_gauss("O1+U2-U1+O2-")
        assert GaussCode.from_json(code.to_json()) == code
        payload = json.loads(code.to_json())
        assert payload[0] == {"crossing": "1", "passage": "O", "sign": 1}


class TestValidate:
    def test_minimal_valid_knot(self):
        assert validate(parse_gauss("O1+U1+")).ok

    def test_double_over(self):
        report = validate(parse_gauss("O1+O1+"))
        assert not report.ok
        assert any("1" in v and "O" in v for v in report.violations)

    def test_sign_mismatch(self):
        report = validate(parse_gauss("O1+U1-"))
        assert not report.ok
        assert any("sign" in v for v in report.violations)

    def test_occurrence_count(self):
        report = validate(parse_gauss("O1+U1+O1+"))
        assert not report.ok

    def test_invalid_rejected_by_writhe(self):
        with pytest.raises(ValidationError):
            writhe(parse_gauss("O1+O1+"))


class TestWrithe:
    def test_vt3(self, vt3):
        assert writhe(vt3) == 1

    def test_empty(self):
        assert writhe(GaussCode()) == 0

    def test_vt2(self, vt2):
        assert writhe(vt2) == 2


class TestParity:
    def test_interleaved_pair_is_odd(self, vt2):
        assert parity(vt2, "1") is Parity.ODD

    def test_vt3_all_even(self, vt3):
        assert parity(vt3, "1") is Parity.EVEN
        assert all(parity(vt3, c) is Parity.EVEN for c in vt3.crossings())

    def test_figure_eight_fixture(self):
        f8 = load_fixture("F8")
        assert parity(f8, "a") is Parity.ODD
        assert parity(f8, "b") is Parity.ODD
        assert parity(f8, "c") is Parity.EVEN

    def test_unknown_crossing(self, vt2):
        with pytest.raises(UnknownCrossingError):
            parity(vt2, "zz")

    def test_rotation_invariance(self, vt3):
        rng = random.Random(4)
        for _ in range(25):
            code = random_code(rng)
            for c in code.crossings():
                p = parity(code, c)
                k = rng.randrange(len(code))
                assert parity(code.rotated(k), c) == p


class TestOddWrithe:
    def test_figure_eight_fixture(self):
        assert odd_writhe(load_fixture("F8")) == 2

    def test_vt2(self, vt2):
        assert odd_writhe(vt2) == 2

    def test_all_even_code_gives_zero(self, vt3):
        assert odd_writhe(vt3) == 0

    def test_mirror_negates(self):
        rng = random.Random(11)
        for _ in range(50):
            code = random_code(rng)
            assert odd_writhe(mirror(code)) == -odd_writhe(code)


class TestIsOddVirtual:
    def test_vt2(self, vt2):
        assert is_odd_virtual(vt2)

    def test_vt3(self, vt3):
        assert not is_odd_virtual(vt3)

    def test_empty_vacuous(self):
        assert is_odd_virtual(GaussCode())


class TestCanonicalForm:
    def test_rotation(self):
        assert canonical_form(parse_gauss("U1+O1+")).text == "O1+U1+"

    def test_relabeling(self):
        assert canonical_form(parse_gauss("O7+O3+U7+U3+")).text == "O1+O2+U1+U2+"

    def test_idempotent(self):
        rng = random.Random(7)
        for _ in range(30):
            code = random_code(rng)
            canon = canonical_form(code)
            assert canonical_form(canon) == canon

    def test_constant_on_orbits(self):
        rng = random.Random(8)
        for _ in range(20):
            code = random_code(rng, min_crossings=1)
            canon = canonical_form(code)
            rotated = code.rotated(rng.randrange(len(code)))
            relabel = {c: f"z{i}" for i, c in enumerate(code.crossings())}
            renamed = GaussCode(
                tuple(GaussEntry(relabel[e.crossing], e.passage, e.sign)
                      for e in rotated.entries)
            )
            assert canonical_form(rotated) == canon
            assert canonical_form(renamed) == canon


def test_label_increments_sum_to_zero():
    rng = random.Random(3)
    for _ in range(60):
        code = random_code(rng)
        assert sum(increment(e) for e in code.entries) == 0
