from fractions import Fraction

from hypothesis import settings, strategies as st

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_ints = st.integers(min_value=-50, max_value=50)
fractions = st.fractions(min_value=-40, max_value=40, max_denominator=30)
coeff_lists = st.lists(fractions, min_size=0, max_size=7)


def frac(x) -> Fraction:
    return Fraction(x)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
