import pytest

from pigeonproof.checker import HAVE_NATIVE

BACKENDS = ["python"] + (["native"] if HAVE_NATIVE else [])


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param
