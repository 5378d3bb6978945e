import json


from betapar.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDbeta:
    def test_tribonacci(self, capsys):
        code, out, _ = run(capsys, "dbeta", "--base", "tribonacci")
        assert code == 0
        assert "111" in out and "simple" in out and "F" in out

    def test_minus_json(self, capsys):
        code, out, _ = run(capsys, "dbeta", "--base", "quadratic-minus:4,2", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["dbeta1"] == "3(1)"
        assert data["classification"] == "non-simple"
        assert data["pf_class"] == "PF"

    def test_plus(self, capsys):
        code, out, _ = run(capsys, "dbeta", "--base", "quadratic-plus:4,2")
        assert code == 0 and "42" in out

    def test_bad_base(self, capsys):
        code, _, err = run(capsys, "dbeta", "--base", "gibberish")
        assert code == 1 and "error" in err


class TestAdd:
    def test_gde_chain(self, capsys):
        code, out, _ = run(capsys, "add", "--base", "quadratic-plus:4,2",
                           "--algo", "gde-chain", "--x", "6", "--y", "6")
        assert code == 0 and "value-ok" in out

    def test_block(self, capsys):
        code, out, _ = run(capsys, "add", "--base", "tribonacci",
                           "--algo", "block:14,2,5", "--x", "1", "--y", "1")
        assert code == 0 and "value-ok" in out

    def test_zero(self, capsys):
        code, out, _ = run(capsys, "add", "--base", "quadratic-plus:4,2",
                           "--algo", "gde-chain", "--x", "0", "--y", "0", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["result"] == "0" and data["value_ok"]

    def test_shifted(self, capsys):
        code, out, _ = run(capsys, "add", "--base", "quadratic-plus:4,2",
                           "--algo", "gde-chain", "--shift", "3", "--x=-3,1", "--y=2")
        assert code == 0 and "value-ok" in out

    def test_special_family_dispatch(self, capsys):
        code, out, _ = run(capsys, "add", "--base", "quadratic-plus:4,3",
                           "--algo", "gde-chain", "--x", "7", "--y", "7")
        assert code == 0 and "value-ok" in out

    def test_digit_out_of_alphabet(self, capsys):
        code, _, err = run(capsys, "add", "--base", "quadratic-plus:4,2",
                           "--algo", "gde-chain", "--x", "9", "--y", "0")
        assert code == 1 and "error" in err

    def test_unknown_algo(self, capsys):
        code, _, err = run(capsys, "add", "--base", "fibonacci",
                           "--algo", "magic", "--x", "1", "--y", "1")
        assert code == 1


class TestVerify:
    def test_exhaustive_pass(self, capsys):
        code, out, _ = run(capsys, "verify", "--rule", "gde-plus:4,2", "--exhaustive", "3")
        assert code == 0 and "pass" in out

    def test_random_pass(self, capsys):
        code, out, _ = run(capsys, "verify", "--rule", "gde-minus:4,1",
                           "--random", "300", "--seed", "7")
        assert code == 0 and "pass" in out

    def test_corrupt_fails_exit2(self, capsys):
        code, out, _ = run(capsys, "verify", "--rule", "gde-plus:4,2",
                           "--exhaustive", "2", "--corrupt")
        assert code == 2 and "counterexample" in out

    def test_corrupt_json(self, capsys):
        code, out, _ = run(capsys, "verify", "--rule", "gde-minus:3,1",
                           "--random", "100", "--seed", "3", "--corrupt", "--json")
        assert code == 2
        data = json.loads(out)
        assert data["verdict"] == "fail" and data["failures"]

    def test_needs_strategy(self, capsys):
        code, _, err = run(capsys, "verify", "--rule", "gde-plus:4,2")
        assert code == 1

    def test_bad_rule(self, capsys):
        code, _, err = run(capsys, "verify", "--rule", "gde-weird:1", "--exhaustive", "2")
        assert code == 1


class TestBlockAdd:
    def test_explicit_params(self, capsys):
        code, out, _ = run(capsys, "block-add", "--base", "tribonacci",
                           "--k", "14", "--ell", "2", "--s", "5",
                           "--x", "2,1,2", "--y", "1,0,2")
        assert code == 0 and "value-ok" in out

    def test_inconsistent_k(self, capsys):
        code, _, err = run(capsys, "block-add", "--base", "tribonacci",
                           "--k", "12", "--ell", "2", "--s", "5",
                           "--x", "1", "--y", "1")
        assert code == 1

    def test_missing_params(self, capsys):
        code, _, err = run(capsys, "block-add", "--base", "tribonacci",
                           "--x", "1", "--y", "1")
        assert code == 1

    def test_estimate_s_flag(self, capsys):
        code, out, _ = run(capsys, "block-add", "--base", "fibonacci",
                           "--estimate-s", "--test-len", "6",
                           "--x", "2,1", "--y", "1,2")
        assert code == 0
        assert "estimated s = 2" in out and "value-ok" in out


class TestBounds:
    def test_dbonacci3(self, capsys):
        code, out, _ = run(capsys, "bounds", "--base", "dbonacci:3")
        assert code == 0
        assert "cardinality >= 4" in out
        assert "cardinality >= 3" in out
        assert "2 <= M <= 2" in out

    def test_quadratic_plus_json(self, capsys):
        code, out, _ = run(capsys, "bounds", "--base", "quadratic-plus:4,2", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["one_block_cardinality_lower_bound"] == 7
        assert data["block_cardinality_lower_bound_simple"] == 7
        assert data["block_minimal_M_interval"] == [6, 8]

    def test_quadratic_minus(self, capsys):
        code, out, _ = run(capsys, "bounds", "--base", "quadratic-minus:4,2", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["block_cardinality_lower_bound_nonsimple"] == 5

    def test_salem_reporter(self, capsys):
        code, out, _ = run(capsys, "bounds", "--base", "1,-1,-1,-1,1")
        assert code == 0 and "impossible-evidence" in out

    def test_digit_string_roundtrip_in_json(self, capsys):
        from betapar.digits import parse_digits

        code, out, _ = run(capsys, "add", "--base", "tribonacci",
                           "--algo", "block:14,2,5", "--x", "2,0.1", "--y", "1,1", "--json")
        assert code == 0
        data = json.loads(out)
        parsed = parse_digits(data["result"])
        assert str(parsed) == data["result"]


class TestDeterminism:
    def test_seeded_verify_is_reproducible(self, capsys):
        argv = ["verify", "--rule", "gde-minus:4,1", "--random", "150",
                "--seed", "12", "--json"]
        code1, out1, _ = run(capsys, *argv)
        code2, out2, _ = run(capsys, *argv)
        assert code1 == code2 == 0
        assert out1 == out2
