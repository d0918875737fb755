"""Smoke test for the python module: catalog access, chi, freeness, classes."""
import json

import freearr


def main():
    names = freearr.catalog_names()
    assert names == ["a", "b", "c", "d", "dpp", "e7"], names

    d = freearr.catalog_text("d")
    assert freearr.chi(d) == "(t-1)*(t-5)^4", freearr.chi(d)
    assert freearr.chi_roots(d) == [1, 5, 5, 5, 5]

    verdict = json.loads(freearr.is_free(d))
    assert verdict["free"]
    assert verdict["certificate"]["exponents"] == [1, 5, 5, 5, 5]
    ok, kind, reason = freearr.verify_certificate(d, json.dumps(verdict["certificate"]))
    assert ok, reason
    assert kind == "free"

    dpp = freearr.catalog_text("dpp")
    cls = json.loads(freearr.classify(dpp, "af"))
    assert cls["membership"] == "nonmember", cls

    boolean2 = "dim 2\n1 0\n0 1\n"
    assert freearr.chi_roots(boolean2) == [1, 1]
    assert freearr.chi_roots(freearr.product(boolean2, boolean2)) == [1, 1, 1, 1]
    assert freearr.deletion(boolean2, [0, 1]) == "dim 2\n1 0\n"
    assert freearr.restriction(boolean2, [[1, 0]]) == "dim 1\n1\n"
    assert freearr.localization(boolean2, [[1, 0]]) == "dim 2\n1 0\n"

    assert freearr.linear_isomorphic(boolean2, "dim 2\n1 1\n1 -1\n")
    assert not freearr.linear_isomorphic(boolean2, "dim 2\n1 0\n")

    try:
        freearr.chi("dim 2\n1 0 0\n")
    except freearr.FreearrError:
        pass
    else:
        raise AssertionError("expected a parse error")

    print("smoke ok")


if __name__ == "__main__":
    main()
