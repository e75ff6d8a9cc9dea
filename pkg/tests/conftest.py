import pytest

from jsjcube.complex.fixtures import (
    double_of_word,
    fix_d33,
    fix_dcomm,
    fix_g2,
    fix_grid33,
)

DCOMM_TGG = """\
# double of the rose along the commutator
assert hyperbolic
vgraph A
  v o
  e a o o
  e b o o
endvgraph
vgraph B
  v o
  e a o o
  e b o o
endvgraph
tube T 4
  end A a b -a -b
  end B a b -a -b
endtube
"""

D33_GOG = """\
v A rank 2
v B rank 2
e t A:aaabbb B:aaabbb
"""


@pytest.fixture
def dcomm():
    return fix_dcomm()


@pytest.fixture
def dcomm_raw():
    return fix_dcomm(raw=True)


@pytest.fixture
def d33():
    return fix_d33()


@pytest.fixture
def g2():
    return fix_g2()


@pytest.fixture
def grid33():
    return fix_grid33()


@pytest.fixture
def double_word():
    return double_of_word


@pytest.fixture
def dcomm_file(tmp_path):
    path = tmp_path / "dcomm.tgg"
    path.write_text(DCOMM_TGG, encoding="utf-8")
    return path


@pytest.fixture
def d33_gog_file(tmp_path):
    path = tmp_path / "d33.gog"
    path.write_text(D33_GOG, encoding="utf-8")
    return path
