import json

import pytest

from monadica import core
from monadica.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestEval:
    def test_exponential_of_an_impulse(self, capsys):
        code, out = run(capsys, "eval", "exp(x)", "--at", '{"shadow":0,"d":{"e:1":1}}')
        assert code == 0
        assert json.loads(out) == {"shadow": 1.0, "d": {"e:1": 1.0}}

    def test_output_round_trips_bit_exactly(self, capsys):
        payload = '{"shadow":0.1,"d":{"h":0.3333333333333333}}'
        code, out = run(capsys, "eval", "x", "--at", payload)
        assert code == 0
        assert core.from_json(out) == core.from_json(payload)

    def test_domain_error_exit_code(self, capsys):
        code, out = run(capsys, "eval", "log(x)", "--at", '{"shadow":-1,"d":{}}')
        assert code == 1
        assert "error" in json.loads(out)


class TestDiff:
    def test_first_derivative(self, capsys):
        code, out = run(capsys, "diff", "x^2", "--at", '{"shadow":3,"d":{}}')
        assert code == 0
        assert json.loads(out) == 6.0

    def test_higher_order(self, capsys):
        code, out = run(capsys, "diff", "x^2", "--at", '{"shadow":3,"d":{}}', "--order", "2")
        assert json.loads(out) == 2.0


class TestTaylor:
    def test_exponential(self, capsys):
        code, out = run(
            capsys,
            "taylor",
            "exp(x)",
            "--center",
            "0",
            "--order",
            "3",
            "--at",
            '{"shadow":0.5,"d":{}}',
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["partial_sum"] == pytest.approx(1.6458333333333333)
        assert 0 < doc["theta"] < 1


class TestSeq:
    def test_prefix(self, capsys):
        code, out = run(capsys, "seq", "print", '{"shadow":2,"d":{"e:1":1}}', "--terms", "3")
        assert code == 0
        assert json.loads(out) == [3.0, 2.0, 2.0]

    def test_unknown_generator_is_a_domain_error(self, capsys):
        code, out = run(capsys, "seq", "print", '{"shadow":0,"d":{"bogus":1}}')
        assert code == 1
        assert "bogus" in json.loads(out)["error"]


class TestSets:
    CLOSED_01 = '{"intervals":[{"lo":0,"hi":1,"lo_closed":true,"hi_closed":true}],"points":[],"extras":[]}'

    def test_interior(self, capsys):
        code, out = run(capsys, "sets", "interior", self.CLOSED_01)
        assert code == 0
        doc = json.loads(out)
        assert doc["intervals"] == [
            {"lo": 0.0, "hi": 1.0, "lo_closed": False, "hi_closed": False}
        ]

    def test_length_and_sup(self, capsys):
        assert json.loads(run(capsys, "sets", "length", self.CLOSED_01)[1]) == 1.0
        assert json.loads(run(capsys, "sets", "sup", self.CLOSED_01)[1]) == 1.0

    def test_member(self, capsys):
        code, out = run(
            capsys, "sets", "member", '{"shadow":0.5,"d":{"e:1":1}}', self.CLOSED_01
        )
        assert json.loads(out) is True

    def test_union(self, capsys):
        other = '{"intervals":[{"lo":1,"hi":2,"lo_closed":true,"hi_closed":true}],"points":[],"extras":[]}'
        code, out = run(capsys, "sets", "union", self.CLOSED_01, other)
        doc = json.loads(out)
        assert doc["intervals"] == [
            {"lo": 0.0, "hi": 2.0, "lo_closed": True, "hi_closed": True}
        ]

    def test_arity_errors(self, capsys):
        code, out = run(capsys, "sets", "union", self.CLOSED_01)
        assert code == 1
        assert "error" in json.loads(out)

    def test_monad_takes_a_real_set(self, capsys):
        code, out = run(
            capsys, "sets", "monad", '{"intervals":[],"points":[2.5]}'
        )
        assert code == 0
        assert json.loads(out) == {"intervals": [], "points": [2.5], "extras": []}

    def test_pretty_output_is_indented(self, capsys):
        code, out = run(capsys, "sets", "shadow", self.CLOSED_01, "--pretty")
        assert code == 0 and out.startswith("{\n")


class TestVerify:
    def test_single_suite_passes(self, capsys):
        code, out = run(capsys, "verify", "--suite", "identities")
        assert code == 0
        assert "PASS identities." in out
        summary = json.loads(out.strip().splitlines()[-1])
        assert summary["failed"] == 0

    def test_seed_is_reported(self, capsys):
        code, out = run(capsys, "verify", "--suite", "ode", "--seed", "3")
        summary = json.loads(out.strip().splitlines()[-1])
        assert summary["seed"] == 3

    def test_environment_seed_is_the_default(self, capsys, monkeypatch):
        monkeypatch.setenv("MONADICA_SEED", "11")
        code, out = run(capsys, "verify", "--suite", "ode")
        summary = json.loads(out.strip().splitlines()[-1])
        assert summary["seed"] == 11

    def test_any_failure_exits_two(self, capsys, monkeypatch):
        from monadica import verify
        from monadica.verify import CheckResult

        broken = dict(verify.SUITES)
        broken["doomed"] = lambda seed: [CheckResult("doomed", "never", False, "x")]
        monkeypatch.setattr(verify, "SUITES", broken)
        code, out = run(capsys, "verify", "--suite", "doomed")
        assert code == 2
        assert "FAIL doomed.never" in out


def test_usage_errors_exit_nonzero():
    with pytest.raises(SystemExit) as info:
        main(["eval"])  # missing --at
    assert info.value.code != 0
