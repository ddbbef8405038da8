import pytest

from abshear import kernels

ACCEPTANCE_LINES = []

BACKENDS = ["python"] + (["compiled"] if kernels.compiled_impl is not None else [])


@pytest.fixture(params=BACKENDS)
def backend(request, monkeypatch):
    impl = kernels.python_impl if request.param == "python" else kernels.compiled_impl
    monkeypatch.setattr(kernels, "impl", impl)
    return request.param


@pytest.fixture
def record():
    """Log one PASS/FAIL line for an acceptance criterion and assert it."""

    def _record(criterion, ok, detail):
        ACCEPTANCE_LINES.append(f"criterion {criterion:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, detail

    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
